#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <type_traits>

#include "gie/units.hpp"

using namespace gie;
namespace u = gie::units;

// ---------------------------------------------------------------------------
// Compile-time checks: the dimension system is exercised with
// requires-expressions so that ill-formed combinations are probed without
// aborting the build.
// ---------------------------------------------------------------------------

template <typename A, typename B>
concept Addable = requires(A a, B b) { a + b; };
template <typename A, typename B>
concept Subtractable = requires(A a, B b) { a - b; };
template <typename A, typename B>
concept Comparable = requires(A a, B b) { a < b; };
template <typename Q>
concept HasSqrt = requires(Q q) { u::qsqrt(q); };
template <typename Q>
concept ScalarReadable = requires(Q q) { u::scalar(q); };

// Same dimension: fine. Mixed dimensions: rejected in the immediate context.
static_assert(Addable<u::Mass, u::Mass>);
static_assert(!Addable<u::Mass, u::Length>);
static_assert(!Addable<u::Energy, u::Action>);
static_assert(Subtractable<u::Force, u::Force>);
static_assert(!Subtractable<u::Force, u::Energy>);
static_assert(Comparable<u::Duration, u::Duration>);
static_assert(!Comparable<u::Duration, u::Frequency>);

// Square roots demand even exponents.
static_assert(HasSqrt<u::Area>);
static_assert(u::Area{}.value() == 0.0);
static_assert(!HasSqrt<u::Mass>);
static_assert(!HasSqrt<u::Action>);
static_assert(HasSqrt<u::Dimensionless>);

// Only dimensionless quantities collapse back to a bare double.
static_assert(ScalarReadable<u::Dimensionless>);
static_assert(!ScalarReadable<u::Mass>);
static_assert(!ScalarReadable<u::GravConstant>);

// Product and quotient types are computed in the exponents.
static_assert(
    std::is_same_v<decltype(u::Mass{} * u::Velocity{}), u::Qty<1, 1, -1>>);
static_assert(std::is_same_v<decltype(u::Force{} * u::Length{}), u::Energy>);
static_assert(std::is_same_v<decltype(u::Energy{} * u::Duration{}), u::Action>);
static_assert(
    std::is_same_v<decltype(u::Length{} / u::Duration{}), u::Velocity>);
static_assert(std::is_same_v<decltype(1.0 / u::Duration{}), u::Frequency>);
static_assert(
    std::is_same_v<decltype(u::qsqrt(u::Area{})), u::Length>);

// Constexpr arithmetic carries values along with the tags.
constexpr u::Energy kWork = u::Force{3.0} * u::Length{2.0};
static_assert(kWork.value() == 6.0);
constexpr u::Dimensionless kRatio = u::Mass{10.0} / u::Mass{4.0};
static_assert(u::scalar(kRatio) == 2.5);
static_assert((u::Mass{2.0} + u::Mass{3.0}).value() == 5.0);
static_assert((-u::Mass{2.0}).value() == -2.0);
static_assert((u::Mass{2.0} * 3.0).value() == 6.0);
static_assert((3.0 * u::Mass{2.0}).value() == 6.0);
static_assert((u::Mass{6.0} / 3.0).value() == 2.0);
static_assert(u::Mass{1.0} < u::Mass{2.0});
static_assert(u::Mass{2.0} >= u::Mass{2.0});

// The project's key composite expressions come out dimensionless exactly when
// they should: the pair phase G m^2 t / (hbar d) and the mass-ratio bound.
static_assert(std::is_same_v<decltype(u::GravConstant{} * u::Mass{} *
                                      u::Mass{} * u::Duration{} /
                                      (u::Action{} * u::Length{})),
                             u::Dimensionless>);
static_assert(std::is_same_v<decltype(u::Action{} * u::Velocity{} /
                                      u::GravConstant{}),
                             u::Qty<2, 0, 0>>);  // planck mass squared

TEST_CASE("constant accessors carry the tagged SI values") {
  const PhysicalConstants c;
  CHECK(u::grav_constant(c).value() == c.G);
  CHECK(u::reduced_planck(c).value() == c.hbar());
  CHECK(u::light_speed(c).value() == c.c);
  CHECK(u::planck_mass(c).value() == c.planck_mass());
  CHECK(u::planck_length(c).value() == c.planck_length());
}

TEST_CASE("planck scales close under the dimension algebra") {
  const PhysicalConstants c;
  // m_P = sqrt(hbar c / G), l_P = sqrt(hbar G / c^3), built entirely inside
  // the tagged system.
  const u::Mass mp = u::qsqrt(u::reduced_planck(c) * u::light_speed(c) /
                              u::grav_constant(c));
  CHECK(mp.value() == doctest::Approx(c.planck_mass()).epsilon(1e-12));

  const u::Length lp =
      u::qsqrt(u::reduced_planck(c) * u::grav_constant(c) /
               (u::light_speed(c) * u::light_speed(c) * u::light_speed(c)));
  CHECK(lp.value() == doctest::Approx(c.planck_length()).epsilon(1e-12));
}

TEST_CASE("pair phase assembled through tagged quantities is dimensionless") {
  const PhysicalConstants c;
  const u::Mass m{1e-12};
  const u::Length d{1.5e-6};
  const u::Duration t{1e-6};
  const u::Dimensionless phase =
      u::grav_constant(c) * m * m * t / (u::reduced_planck(c) * d);
  CHECK(u::scalar(phase) ==
        doctest::Approx(c.G * 1e-24 * 1e-6 / (c.hbar() * 1.5e-6))
            .epsilon(1e-12));
  CHECK(u::scalar(phase) == doctest::Approx(0.4219279577625).epsilon(1e-10));
}
