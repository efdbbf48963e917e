#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gie/errors.hpp"
#include "gie/quadrature.hpp"
#include "support/oracles.hpp"

using gie::adaptive_simpson;

TEST_CASE("polynomials up to cubic are integrated exactly") {
  // Simpson is exact for cubics even before any refinement.
  const auto f = [](double x) { return 3 * x * x * x - x * x + 4 * x - 2; };
  // Antiderivative: 3/4 x^4 - x^3/3 + 2x^2 - 2x.
  const auto F = [](double x) {
    return 0.75 * x * x * x * x - x * x * x / 3.0 + 2 * x * x - 2 * x;
  };
  CHECK(adaptive_simpson(f, -1.0, 2.5) ==
        doctest::Approx(F(2.5) - F(-1.0)).epsilon(1e-13));
}

TEST_CASE("transcendental reference values") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0,
                         oracle::kPi) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -8.0, 8.0,
                         1e-12) ==
        doctest::Approx(std::sqrt(oracle::kPi)).epsilon(1e-10));
  // Oscillatory integrand.
  CHECK(adaptive_simpson([](double x) { return std::sin(40.0 * x); }, 0.0,
                         1.0) ==
        doctest::Approx((1.0 - std::cos(40.0)) / 40.0).epsilon(1e-8));
}

TEST_CASE("agrees with the Gauss-Legendre oracle on a stiff integrand") {
  const auto f = [](double x) { return 1.0 / (1e-3 + x * x); };
  const double ref = oracle::gauss_legendre(f, -1.0, 1.0, 256);
  CHECK(adaptive_simpson(f, -1.0, 1.0, 1e-10) ==
        doctest::Approx(ref).epsilon(1e-8));
}

TEST_CASE("degenerate and reversed intervals") {
  CHECK(adaptive_simpson([](double x) { return x; }, 2.0, 2.0) == 0.0);
  // Reversed interval flips the sign.
  CHECK(adaptive_simpson([](double x) { return x * x; }, 1.0, 0.0) ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("absolute tolerance path for zero-mean integrands") {
  // Relative tolerance alone cannot converge an integral that is exactly 0.
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, -2.0, 2.0,
                         1e-8, 1e-12) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("depth exhaustion raises a numerical error") {
  // A genuine (integrable) singularity at an irrational point defeats the
  // fixed depth budget at tight tolerance.
  const auto spike = [](double x) {
    return 1.0 / std::sqrt(std::abs(x - 0.577215664901532));
  };
  CHECK_THROWS_AS(adaptive_simpson(spike, 0.0, 1.0, 1e-14, 0.0, 8),
                  gie::NumericalError);
}

TEST_CASE("sin^2(wt)/w^2 family used by the decoherence integral") {
  // integral_0^K sin^2(c k)/k^2 dk with the k->0 limit handled by the
  // integrand itself; compare to the oracle.
  const double c = 0.7, K = 50.0;
  const auto f = [&](double k) {
    if (k < 1e-12) return c * c;
    const double s = std::sin(c * k);
    return s * s / (k * k);
  };
  const double ref = oracle::gauss_legendre(f, 0.0, K, 512);
  CHECK(adaptive_simpson(f, 0.0, K, 1e-10) ==
        doctest::Approx(ref).epsilon(1e-8));
}
