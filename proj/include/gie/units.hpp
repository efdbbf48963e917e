#pragma once
#include <cmath>

#include "gie/constants.hpp"

namespace gie::units {

// Compile-time dimension tag over the SI base dimensions used in this
// project: mass (kg), length (m), time (s), temperature (K). Mixing
// incompatible dimensions is a compile error, which is what the unit tests
// probe with requires-expressions.
template <int M, int L, int T, int K = 0>
struct Qty {
  double v = 0.0;

  constexpr double value() const { return v; }

  friend constexpr Qty operator+(Qty a, Qty b) { return Qty{a.v + b.v}; }
  friend constexpr Qty operator-(Qty a, Qty b) { return Qty{a.v - b.v}; }
  friend constexpr Qty operator-(Qty a) { return Qty{-a.v}; }
  friend constexpr Qty operator*(double s, Qty a) { return Qty{s * a.v}; }
  friend constexpr Qty operator*(Qty a, double s) { return Qty{a.v * s}; }
  friend constexpr Qty operator/(Qty a, double s) { return Qty{a.v / s}; }
  friend constexpr bool operator<(Qty a, Qty b) { return a.v < b.v; }
  friend constexpr bool operator>(Qty a, Qty b) { return a.v > b.v; }
  friend constexpr bool operator<=(Qty a, Qty b) { return a.v <= b.v; }
  friend constexpr bool operator>=(Qty a, Qty b) { return a.v >= b.v; }
};

template <int M1, int L1, int T1, int K1, int M2, int L2, int T2, int K2>
constexpr Qty<M1 + M2, L1 + L2, T1 + T2, K1 + K2> operator*(
    Qty<M1, L1, T1, K1> a, Qty<M2, L2, T2, K2> b) {
  return {a.v * b.v};
}

template <int M1, int L1, int T1, int K1, int M2, int L2, int T2, int K2>
constexpr Qty<M1 - M2, L1 - L2, T1 - T2, K1 - K2> operator/(
    Qty<M1, L1, T1, K1> a, Qty<M2, L2, T2, K2> b) {
  return {a.v / b.v};
}

template <int M, int L, int T, int K>
constexpr Qty<0 - M, 0 - L, 0 - T, 0 - K> operator/(double s,
                                                    Qty<M, L, T, K> a) {
  return {s / a.v};
}

// Square root is only defined when every exponent halves evenly.
template <int M, int L, int T, int K>
  requires(M % 2 == 0 && L % 2 == 0 && T % 2 == 0 && K % 2 == 0)
Qty<M / 2, L / 2, T / 2, K / 2> qsqrt(Qty<M, L, T, K> a) {
  return {std::sqrt(a.v)};
}

using Dimensionless = Qty<0, 0, 0, 0>;
using Mass = Qty<1, 0, 0>;               // kg
using Length = Qty<0, 1, 0>;             // m
using Duration = Qty<0, 0, 1>;           // s
using Temperature = Qty<0, 0, 0, 1>;     // K
using Velocity = Qty<0, 1, -1>;          // m/s
using Acceleration = Qty<0, 1, -2>;      // m/s^2
using Frequency = Qty<0, 0, -1>;         // 1/s (also rad/s)
using Area = Qty<0, 2, 0>;               // m^2
using Force = Qty<1, 1, -2>;             // N
using Energy = Qty<1, 2, -2>;            // J
using Action = Qty<1, 2, -1>;            // J s
using GravConstant = Qty<-1, 3, -2>;     // m^3 / (kg s^2)

// Dimensionless quantities interconvert freely with bare doubles.
constexpr double scalar(Dimensionless d) { return d.v; }

inline GravConstant grav_constant(const PhysicalConstants& c) {
  return {c.G};
}
inline Action reduced_planck(const PhysicalConstants& c) {
  return {c.hbar()};
}
inline Velocity light_speed(const PhysicalConstants& c) { return {c.c}; }
inline Mass planck_mass(const PhysicalConstants& c) {
  return {c.planck_mass()};
}
inline Length planck_length(const PhysicalConstants& c) {
  return {c.planck_length()};
}

}  // namespace gie::units
