#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "gie/qstate.hpp"
#include "support/oracles.hpp"

using namespace gie;

namespace {
Ket random_state(const std::vector<int>& dims, std::mt19937_64& rng) {
  int total = 1;
  for (int d : dims) total *= d;
  return ket_from(oracle::random_ket(total, rng), dims);
}
}  // namespace

TEST_CASE("basis and list construction") {
  const Ket k = basis_ket(4, 2);
  CHECK(k.dim() == 4);
  CHECK(std::abs(k.amp(2) - 1.0) < 1e-15);
  CHECK(std::abs(k.amp(0)) == 0.0);

  const Ket psi = ket_from({0.5, 0.5, 0.5, 0.5}, {2, 2});
  assert_valid(psi);
  CHECK(psi.dims == std::vector<int>{2, 2});

  CHECK_THROWS_AS(ket_from({0.5, 0.5}, {2, 2}), std::invalid_argument);
}

TEST_CASE("normalization is enforced by assert_valid") {
  Ket psi = ket_from({0.7, 0.7}, {2});
  CHECK_THROWS_AS(assert_valid(psi), NumericalError);
  psi.amp.normalize();
  CHECK_NOTHROW(assert_valid(psi));
}

TEST_CASE("density matrix validity checks trace, hermiticity, positivity") {
  const Ket psi = ket_from({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {2});
  DensityMatrix r = to_density(psi);
  CHECK_NOTHROW(assert_valid(r));

  DensityMatrix bad = r;
  bad.rho(0, 1) = 0.9;  // breaks hermiticity
  CHECK_THROWS_AS(assert_valid(bad), NumericalError);

  Mat neg = Mat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(assert_valid(density_from(neg, {2})), NumericalError);
}

TEST_CASE("first factor is the slow index") {
  // |1>⊗|0> on 2x3 must place amplitude at flat index 1*3 + 0 = 3.
  const Ket a = basis_ket(2, 1);
  const Ket b = basis_ket(3, 0);
  const Ket ab = tensor(a, b);
  CHECK(ab.dims == std::vector<int>{2, 3});
  CHECK(std::abs(ab.amp(3) - 1.0) < 1e-15);
}

TEST_CASE("kron matches tensor on computational states") {
  std::mt19937_64 rng(11);
  const Ket a = random_state({3}, rng);
  const Ket b = random_state({4}, rng);
  const Ket ab = tensor(a, b);
  const Mat outer_a = a.amp * a.amp.adjoint();
  const Mat outer_b = b.amp * b.amp.adjoint();
  const Mat k = kron(outer_a, outer_b);
  const Mat expected = ab.amp * ab.amp.adjoint();
  CHECK((k - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unitary application preserves norm") {
  std::mt19937_64 rng(17);
  const Ket psi = random_state({2, 5}, rng);
  const Mat d = displacement_operator(Complex(0.3, -0.7), 4);
  const Ket out = apply_to_subsystem(d, 1, psi);
  CHECK(std::abs(out.amp.norm() - 1.0) < 1e-12);
}

TEST_CASE("apply_to_subsystem equals full kron application") {
  std::mt19937_64 rng(23);
  const Ket psi = random_state({2, 3, 2}, rng);
  const Mat h = hadamard();
  const Ket via_sub = apply_to_subsystem(h, 2, psi);
  const Mat full = kron(identity(2), kron(identity(3), h));
  const Ket via_full = gie::apply(full, psi);
  CHECK((via_sub.amp - via_full.amp).norm() < 1e-12);
}

TEST_CASE("apply_to_pair acts on the merged adjacent pair") {
  std::mt19937_64 rng(29);
  const Ket psi = random_state({2, 2, 3}, rng);
  Mat cz = identity(4);
  cz(3, 3) = -1.0;
  const Ket via_pair = apply_to_pair(cz, 0, psi);
  const Ket via_full = gie::apply(kron(cz, identity(3)), psi);
  CHECK((via_pair.amp - via_full.amp).norm() < 1e-12);
}

TEST_CASE("permute_subsystems relabels amplitudes consistently") {
  std::mt19937_64 rng(31);
  const Ket psi = random_state({2, 3}, rng);
  const Ket swapped = permute_subsystems(psi, {1, 0});
  CHECK(swapped.dims == std::vector<int>{3, 2});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(swapped.amp(j * 2 + i) - psi.amp(i * 3 + j)) < 1e-15);
  // Permuting back is the identity.
  const Ket back = permute_subsystems(swapped, {1, 0});
  CHECK((back.amp - psi.amp).norm() < 1e-15);
}

TEST_CASE("partial trace: order of elimination does not matter") {
  std::mt19937_64 rng(37);
  const Ket psi = random_state({2, 3, 2}, rng);
  const DensityMatrix r = to_density(psi);
  const DensityMatrix keep0 = partial_trace(r, {0});
  const DensityMatrix via_two_steps =
      partial_trace(partial_trace(r, {0, 1}), {0});
  CHECK((keep0.rho - via_two_steps.rho).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(keep0.rho.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("partial trace of a product state gives the factors") {
  std::mt19937_64 rng(41);
  const Ket a = random_state({2}, rng);
  const Ket b = random_state({3}, rng);
  const DensityMatrix r = to_density(tensor(a, b));
  const DensityMatrix ra = partial_trace(r, {0});
  const Mat expected = a.amp * a.amp.adjoint();
  CHECK((ra.rho - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("negativity matches brute-force partial transpose on random states") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> dims = trial % 2 ? std::vector<int>{2, 3}
                                            : std::vector<int>{2, 2, 2};
    const Ket psi = random_state(dims, rng);
    const DensityMatrix r = to_density(psi);
    const int in_a = 1;
    std::vector<bool> mask(dims.size(), false);
    mask[0] = true;
    const double lib = negativity(r, in_a);
    const double ref = oracle::negativity_bruteforce(r.rho, dims, mask);
    CHECK(lib == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("negativity of Bell state is 1/2, product state is 0") {
  const double s = 1.0 / std::sqrt(2.0);
  const Ket bell = ket_from({s, 0.0, 0.0, s}, {2, 2});
  CHECK(negativity(to_density(bell), 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(ppt_separable(to_density(bell), 1));

  const Ket prod = tensor(basis_ket(2, 0), basis_ket(2, 1));
  CHECK(negativity(to_density(prod), 1) < 1e-14);
  CHECK(ppt_separable(to_density(prod), 1));
}

TEST_CASE("schmidt coefficients and entanglement entropy") {
  const double s = 1.0 / std::sqrt(2.0);
  const Ket bell = ket_from({s, 0.0, 0.0, s}, {2, 2});
  const auto sc = schmidt_coefficients(bell, 1);
  REQUIRE(sc.size() >= 2);
  CHECK(sc[0] == doctest::Approx(s).epsilon(1e-12));
  CHECK(sc[1] == doctest::Approx(s).epsilon(1e-12));
  CHECK(entanglement_entropy(bell, 1, true) ==
        doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(47);
  const Ket psi = random_state({2, 4}, rng);
  // Entropy from Schmidt coefficients equals reduced-state entropy.
  double h = 0.0;
  for (double c : schmidt_coefficients(psi, 1)) {
    const double p = c * c;
    if (p > 1e-16) h -= p * std::log2(p);
  }
  CHECK(entanglement_entropy(psi, 1, true) == doctest::Approx(h).epsilon(1e-10));
  CHECK(von_neumann_entropy(partial_trace(psi, {0}), true) ==
        doctest::Approx(h).epsilon(1e-10));
}

TEST_CASE("purity and linear entropy") {
  const Ket psi = basis_ket(2, 0);
  CHECK(purity(to_density(psi)) == doctest::Approx(1.0).epsilon(1e-12));
  Mat mixed = 0.5 * Mat::Identity(2, 2);
  const DensityMatrix r = density_from(mixed, {2});
  CHECK(purity(r) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(linear_entropy(r) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity conventions") {
  std::mt19937_64 rng(53);
  const Ket a = random_state({4}, rng);
  const Ket b = random_state({4}, rng);
  const Complex ov = overlap(a, b);
  CHECK(fidelity(a, b) == doctest::Approx(std::norm(ov)).epsilon(1e-12));
  CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));
  // Pure-vs-mixed reduces to <a|rho|a>.
  const DensityMatrix rb = to_density(b);
  CHECK(fidelity(a, rb) == doctest::Approx(std::norm(ov)).epsilon(1e-12));
  // Uhlmann fidelity of identical states is 1 (eigen-sqrt accuracy is the
  // fidelity tier, not the state-validity tier).
  CHECK(fidelity(rb, rb) == doctest::Approx(1.0).epsilon(tol::fidelity_match));
  // Mixed-vs-pure consistency.
  const DensityMatrix ra = to_density(a);
  CHECK(fidelity(ra, rb) ==
        doctest::Approx(std::norm(ov)).epsilon(tol::fidelity_match));
}

TEST_CASE("coherent state amplitudes are the closed-form Poisson weights") {
  const Complex alpha(0.8, -0.3);
  const int cutoff = 25;
  const Ket c = coherent_state(alpha, cutoff);
  CHECK(c.dim() == cutoff + 1);
  // amp_n = e^{-|a|^2/2} a^n / sqrt(n!)
  double logfact = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) logfact += std::log(double(n));
    const Complex expected = std::exp(-0.5 * std::norm(alpha)) *
                             std::pow(alpha, n) / std::sqrt(std::exp(logfact));
    CHECK(std::abs(c.amp(n) - expected) < 1e-12);
  }
  // Not renormalized: norm < 1 strictly, approaching 1 with the cutoff.
  CHECK(c.amp.norm() < 1.0);
  CHECK(c.amp.norm() > 0.999999);
}

TEST_CASE("displacement operator is unitary and displaces the vacuum") {
  const Complex beta(0.4, 0.2);
  const int cutoff = 30;
  const Mat d = displacement_operator(beta, cutoff);
  CHECK((d * d.adjoint() - identity(cutoff + 1)).cwiseAbs().maxCoeff() < 1e-10);
  const Ket vac = basis_ket(cutoff + 1, 0);
  const Ket disp = gie::apply(d, vac);
  const Ket coh = coherent_state(beta, cutoff);
  // Truncated displacement of the vacuum matches the closed-form coherent
  // state up to truncation error.
  CHECK(std::abs(overlap(disp, coh)) > 1.0 - 1e-9);
}

TEST_CASE("annihilation and number operator algebra") {
  const int cutoff = 12;
  const Mat a = annihilation(cutoff);
  const Mat n = number_operator(cutoff);
  CHECK((a.adjoint() * a - n).cwiseAbs().maxCoeff() < 1e-13);
  // Coherent states are approximate eigenstates of a.
  const Complex alpha(0.5, 0.1);
  const Ket c = coherent_state(alpha, cutoff);
  Vec residual = a * c.amp - alpha * c.amp;
  residual(cutoff) = 0.0;  // the top level is allowed to be off
  CHECK(residual.norm() < 1e-6);
}

TEST_CASE("pauli and hadamard basics") {
  CHECK((pauli_x() * pauli_x() - identity(2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((pauli_z() * pauli_z() - identity(2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((hadamard() * hadamard() - identity(2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((hadamard() * pauli_z() * hadamard() - pauli_x())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("truncation certification catches leaked amplitude") {
  // alpha = 2 on a cutoff-6 space leaks far more than the budget.
  Ket leaky = coherent_state(Complex(2.0, 0.0), 6);
  leaky.amp.normalize();
  CHECK(top_level_mass(leaky, 0) > 1e-3);
  CHECK_THROWS_AS(certify_truncation(leaky, {0}), TruncationError);
  // A tame state passes.
  Ket tame = coherent_state(Complex(0.2, 0.0), 20);
  tame.amp.normalize();
  CHECK_NOTHROW(certify_truncation(tame, {0}));
  // Density-matrix variant agrees with the ket variant.
  CHECK(top_level_mass(to_density(leaky), 0) ==
        doctest::Approx(top_level_mass(leaky, 0)).epsilon(1e-12));
}

TEST_CASE("partial trace from ket equals partial trace from density matrix") {
  std::mt19937_64 rng(59);
  const Ket psi = random_state({2, 2, 3}, rng);
  const DensityMatrix via_ket = partial_trace(psi, {1, 2});
  const DensityMatrix via_dm = partial_trace(to_density(psi), {1, 2});
  CHECK((via_ket.rho - via_dm.rho).cwiseAbs().maxCoeff() < 1e-12);
}
