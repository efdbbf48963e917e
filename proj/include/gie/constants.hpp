#pragma once
#include <cmath>
#include <string>

namespace gie {

// Fundamental constants, SI units. h, c and k_B are exact by definition since the
// 2019 SI redefinition; G carries a relative uncertainty of ~2.2e-5.
// Planck-scale quantities are always recomputed from the stored constants so that a
// caller overriding G (or any other value) gets consistent derived scales.
struct PhysicalConstants {
  double G = 6.67430e-11;                         // m^3 kg^-1 s^-2
  double h = 6.62607015e-34;                      // J s (exact)
  double c = 299792458.0;                         // m / s (exact)
  double k_B = 1.380649e-23;                      // J / K (exact)
  std::string provenance = "CODATA 2018";

  double hbar() const { return h / (2.0 * M_PI); }
  double planck_mass() const { return std::sqrt(hbar() * c / G); }
  double planck_length() const { return std::sqrt(hbar() * G / (c * c * c)); }
  double planck_energy() const { return std::sqrt(hbar() * c * c * c * c * c / G); }
};

// Shared default instance (CODATA values); callers needing overridden
// constants construct their own PhysicalConstants and pass it explicitly.
inline const PhysicalConstants constants{};

}  // namespace gie
