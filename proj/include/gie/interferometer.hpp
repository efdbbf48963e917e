#pragma once
#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>

#include "gie/constants.hpp"
#include "gie/qstate.hpp"

namespace gie {

struct PhasePair {
  double phi1;
  double delta_phi;
};

// Geometry and timing of the adjacent double-interferometer run.
// Branch pair distances, collinear layout: |01> and |10> sit at d1, |11> at the
// closest approach d2, |00> at the far pair distance d3 (default 2*d1 − d2).
struct ExperimentParams {
  double m = 0.0;   // kg
  double d1 = 0.0;  // m
  double d2 = 0.0;  // m
  std::optional<double> d3;  // m
  std::optional<double> L;   // m, horizontal arm length
  std::optional<double> v;   // m/s, traversal speed
  double dt = 0.0;  // s; must equal L/v when both L and v are given
  bool include_far_pair = true;  // gauge-reduce with the |00> phase included
  PhysicalConstants constants{};
};

// Throws ConfigError naming the offending field.
void validate(const ExperimentParams& p);
double far_pair_distance(const ExperimentParams& p);

// Newtonian pair phase φ = G m² Δt / (ħ d), and the algebraically identical
// Planck-unit form (m/m_P)² (c/d) Δt.
double gravitational_phase(double m, double d, double dt, const PhysicalConstants& c);
double gravitational_phase_planck_form(double m, double d, double dt,
                                       const PhysicalConstants& c);

// Mass–field entanglement parameter ξ = (m/m_P)² and the resulting
// single-mass linear-entropy estimate 1 − e^{−ξ}.
double field_mass_entanglement(double m, const PhysicalConstants& c);
double linear_entropy_estimate(double m, const PhysicalConstants& c);

// Gauge-reduced branch phases for the experiment: raw per-branch phases are
// (φ3, φ1, φ1, φ2); the |00> phase is global once factored, leaving
// φ1_eff = φ1 − φ3 (or φ1 when include_far_pair is false) and Δφ = φ2 − φ1.
PhasePair phases_from(const ExperimentParams& p);

// One shared classical field sourced by the mean configuration: every branch
// acquires the same local phase, evaluated at d_m = (d1 + d2)/2.
double mean_field_phase(double m, double d1, double d2, double dt,
                        const PhysicalConstants& c);

// Two-mass state after the interaction region:
// ½ [ |00> + e^{iφ1}|01> + e^{iφ1}|10> + e^{i(φ1+Δφ)}|11> ].
Ket branch_state(double phi1, double delta_phi);

// Single-detector output probabilities after the recombining beam splitters:
// p0 = ½(cos²(φ1/2) + cos²(Δφ/2)), p1 = ½(sin²(φ1/2) + sin²(Δφ/2)).
struct OutputProbabilities {
  double p0;
  double p1;
};
OutputProbabilities output_probabilities(double phi1, double delta_phi);

// Joint detector distribution over the ± ports of both interferometers,
// i.e. |(H ⊗ H) ψ|² arranged as rows = mass-1 outcome, cols = mass-2 outcome.
Eigen::Matrix2d joint_output_distribution(const Ket& two_mass_state);
Eigen::Matrix2d joint_output_distribution(const DensityMatrix& two_mass_state);

// Entanglement witness <X₁Z₂ + Z₁X₂>; values above 1 are impossible for
// separable two-qubit states, the maximally entangled point reaches 2.
double xz_witness(const DensityMatrix& two_mass);
double xz_witness(const Ket& two_mass);
Mat xz_witness_operator();

// Mixed-basis correlations of the pre-recombination state: one mass read in
// the path (Z) basis while the other is recombined and read in the
// interference (X) basis. Keys: "p(i,±)" for Z⊗X and "p(±,j)" for X⊗Z,
// i, j ∈ {0, 1}. Probabilities in each basis pairing sum to 1.
std::map<std::string, double> correlation_table(const Ket& two_mass_state);

}  // namespace gie
