#pragma once
#include <map>
#include <string>
#include <vector>

#include "gie/constants.hpp"
#include "gie/decoherence.hpp"
#include "gie/interferometer.hpp"
#include "gie/qstate.hpp"

namespace gie {

// Scalar result with an explicit SI unit string ("1" for dimensionless).
struct TaggedValue {
  double value = 0.0;
  std::string unit = "1";
};

struct FeasibilityReport {
  std::map<std::string, TaggedValue> values;
  std::map<std::string, bool> flags;
  std::vector<std::string> notes;
  std::string constants_provenance;
};

struct GravitoEmForces {
  double e_field = 0.0;     // gravito-electric field, m/s^2
  double b_field = 0.0;     // gravito-magnetic field, 1/s (default convention)
  double f_electric = 0.0;  // N
  double f_magnetic = 0.0;  // N
  bool relativistic_warning = false;  // v > 0.1 c
};

// Static and motional force scales on a mass M a distance r from an equal
// source mass moving at speed v. Default convention: field of a point source
// with Coulomb-analog prefactors, E_G = G M / r^2 and B_G = mu_G I / r^2
// (mu_G = 4 G / c^2, I = M v), which makes F_B / F_E = 4 v^2 / c^2 exactly.
// literal_prefactors switches both fields to the 1/(4 pi G)-permittivity
// reading, E_G = 4 pi G M / r^2 and B_G = mu_G I / r (dimensionally
// inhomogeneous; kept for comparison).
GravitoEmForces gravito_em_forces(double M, double r, double v,
                                  const PhysicalConstants& k = constants,
                                  bool literal_prefactors = false);

// Planck-scale bound on the product of two connection-coefficient
// uncertainties measured over a region of size L: l_P^2 / L^4 (1/m^2).
double christoffel_uncertainty_bound(double L,
                                     const PhysicalConstants& k = constants);

// Electromagnetic analog of the same measurement bound: hbar c / L^4 (J/m^3).
double em_uncertainty_bound(double L, const PhysicalConstants& k = constants);

// Which-path analysis for single-graviton detection with a mass-m probe of
// size R on interferometer arms d apart over a flight length L at speed v.
FeasibilityReport baym_ozawa_check(double m, double R, double d, double L,
                                   double v,
                                   const PhysicalConstants& k = constants);

// Time for a mass-m superposition of separation s to imprint one radian of
// gravitational phase: m s^2 / hbar.
double peres_rosen_time(double m, double s,
                        const PhysicalConstants& k = constants);

// Neutron-interferometer gravitational phase, evaluated exactly as printed:
// 2 pi g m_n lambda A sin(tilt) / h^2 with h the (unreduced) Planck constant.
double cow_phase(double lambda, double A, double tilt, double m_n, double g,
                 const PhysicalConstants& k = constants);

struct MassSuperpositionResult {
  Ket state;  // two probes, each cos(theta)|m1> + sin(theta)|m2>, phased
  double negativity = 0.0;
};

// Two energy-superposed probes a distance d apart; each branch pair (i, j)
// picks up exp(i [(E_i + E_j)/hbar + G m_i m_j / (hbar d)] dt). Only the
// pairwise gravitational term can entangle them.
MassSuperpositionResult mass_superposition_phases(
    double theta, double E1, double E2, double m1, double m2, double d,
    double dt, const PhysicalConstants& k = constants);

// Rotating-frame phase 2 m Omega A / hbar.
double sagnac_phase(double m, double Omega, double A,
                    const PhysicalConstants& k = constants);

// Experiment planner: aggregates the entangling phase, the mass-field
// entanglement fraction, the objective-collapse timescale, and the
// environmental decoherence budget into pass/fail flags.
//   phase_feasible:    gravitational phase at closest approach >= pi*(1-slack)
//   decoherence_ok:    gamma * dt <= 1
//   feasible:          both
// An empty budget (no coupling/density functions) means gamma = 0.
FeasibilityReport plan(const ExperimentParams& params,
                       const DecoherenceSpec& budget, double slack = 0.8);

}  // namespace gie
