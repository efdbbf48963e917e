#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gie/constants.hpp"
#include "gie/interferometer.hpp"
#include "gie/qstate.hpp"

namespace gie {

// ---------------------------------------------------------------------------
// Mediator model zoo: one quantum field model in two renderings (gate and
// exact mode evolution), plus the classical alternatives it is tested against.
// ---------------------------------------------------------------------------

// Coherent field mediating via branch-conditioned displacements.  The branch
// phases come out as w * xi_ab, where xi_ab = phi_ab / w are the per-branch
// mass-field coupling strengths; w defaults to the interaction angle
// c * dt / d1 snapped to the nearest multiple of 2 pi (elastic closure).
struct GateModel {
  std::complex<double> alpha{3.0, 0.0};  // initial field coherent amplitude
  std::optional<double> w;               // rotation angle over the interaction
  int cutoff = 60;                       // Fock levels 0..cutoff
  double inelasticity = 0.0;  // fraction of the branch displacement left behind
};

// Mode-resolved field: explicit modes evolve exactly (driven-oscillator
// closed form); an empty mode list selects the radial-shell continuum engine
// whose mode density reproduces the Newtonian pair phase.
struct LqgField {
  std::vector<double> mode_freqs;  // rad/s; empty -> continuum engine
  std::vector<double> couplings;   // g_k, one per mode
  std::array<double, 2> x1{0.0, 0.0};  // mass-1 path positions, m
  std::array<double, 2> x2{0.0, 0.0};  // mass-2 path positions, m
  int cutoff = 29;                     // Fock levels per mode
  double wave_speed = constants.c;     // dispersion omega = wave_speed * k
  // Continuum discretization (empty mode list only):
  double k_max_times_min_distance = 1000.0;  // k_max = this / min pair distance
  int shells = 20000;
};

// Semiclassical field sourced by the mean mass configuration: local phases
// only, never entanglement.
struct MeanField {};

// Mediator measured in its number basis and re-prepared after each mass
// interaction: a measure-and-prepare (entanglement-breaking) channel that
// still transports classical records.
struct MeasuredChannel {
  double strength = 1.0;  // scales the conditional displacement i*sqrt(xi)
  int cutoff = 30;
  std::complex<double> alpha{0.0, 0.0};  // initial field amplitude
};

// Ideal quantum phase evolution interleaved with position-basis reduction of
// each mass at the given rate (objective wavefunction collapse).
struct Collapse {
  std::optional<double> rate;  // 1/s; default 1 / penrose_collapse_time(m, d1)
  int steps = 100;             // channel steps across the interaction time
};

// Jointly Gaussian stochastic local phases (shared classical randomness
// allowed through the correlation coefficient).
struct PhaseNoiseSpec {
  std::array<double, 2> means{0.0, 0.0};   // mean local phase per mass, rad
  std::array<double, 2> sigmas{0.0, 0.0};  // standard deviations, rad
  double correlation = 0.0;                // Pearson rho in [-1, 1]
  int draws = 100;                         // ensemble size
};

struct ClassicalDephasing {
  // Defaults (when unset): means = per-mass mean-field phases, sigmas = 0.5.
  std::optional<PhaseNoiseSpec> noise;
};

// Classical-quantum hybrid: configuration-ensemble dynamics with the bilinear
// effective coupling (g1 p_Q x_C + g2 q_Q' k_C); delegates to the Gaussian
// engine and reports the Q|Q' logarithmic negativity.
struct HybridEnsemble {
  double g1 = 1.0;
  double g2 = 1.0;
  double t = 1.0;  // natural-unit evolution time
};

using MediatorModel =
    std::variant<GateModel, LqgField, MeanField, MeasuredChannel, Collapse,
                 ClassicalDephasing, HybridEnsemble>;

struct ProtocolResult {
  DensityMatrix final_two_mass_state;
  std::optional<DensityMatrix> field_state;
  // (time, two-mass snapshot) pairs, chronological.
  std::vector<std::pair<double, DensityMatrix>> trajectory;
  std::optional<PhasePair> phases_extracted;
  std::optional<double> hybrid_log_negativity;
};

// Prepare -> interact (model-specific) -> recombine.  Stochastic models are
// deterministic functions of the seed.
ProtocolResult run_protocol(const MediatorModel& model,
                            const ExperimentParams& params,
                            std::uint64_t seed = 0);

// Raw pair phases per branch (row = mass-1 path, col = mass-2 path):
// [[phi(d3), phi(d1)], [phi(d1), phi(d2)]] with d3 the far-pair distance.
Eigen::Matrix2d branch_phase_table(const ExperimentParams& p);

// Collinear path positions realizing the branch distance table:
// x1 = {0, d3 - d1}, x2 = {d3, d1}.
void collinear_positions(const ExperimentParams& p, std::array<double, 2>* x1,
                         std::array<double, 2>* x2);

// Exact branch-conditioned field evolution over rotation angle w: each branch
// |ab> evolves the field under the displaced-oscillator generator
// n_hat + sqrt(xi_ab) (i a† - i a) scaled by w, producing the secular branch
// phase w * xi_ab on top of the displaced-frame rotation.  Returns the joint
// {mass1, mass2, field} pure state; at w a multiple of 2 pi the field returns
// to |alpha> exactly and the masses carry phases e^{i w xi_ab}.
Ket gate_model_evolution(std::complex<double> alpha, const Eigen::Matrix2d& xi,
                         double w, int cutoff);

// Closed-form (driven-oscillator) evolution of the explicit-mode field model
// for time t, from field vacuum and both masses in path superposition.
// Returns the joint {mass1, mass2, mode_1, ..., mode_K} pure state.
Ket lqg_exact_evolution(const LqgField& model, double t);

// Continuum (radial-shell) branch table at time t: branch phases relative to
// the |00> branch, and pairwise branch coherence exponents Gamma such that
// rho_{ab,a'b'} = 1/4 e^{i(theta_ab - theta_a'b')} e^{-Gamma_{ab,a'b'}}.
struct ContinuumBranchTable {
  Eigen::Matrix2d phase;                // theta_ab, |00> removed
  Eigen::Matrix4d coherence_exponent;   // Gamma, indexed by ab = 2a + b
};
ContinuumBranchTable lqg_continuum_branch_table(const ExperimentParams& p,
                                                const LqgField& model,
                                                double t);

// Quasi-Newtonian pair phase G m^2 t / (hbar * separation); identical to
// gravitational_phase.
double lqg_newtonian_limit_phase(double m, double separation, double t,
                                 const PhysicalConstants& c = constants);

// hbar d / (G m^2): the time scale on which gravitationally distinct branches
// would be objectively reduced.
double penrose_collapse_time(double m, double d,
                             const PhysicalConstants& c = constants);

// Ideal phase evolution interleaved with per-mass position dephasing.
ProtocolResult collapse_channel_evolution(const ExperimentParams& params,
                                          double rate, int steps = 100);

// Ensemble average over jointly Gaussian local phases; every draw is a
// product state (trajectory holds the per-draw states).
ProtocolResult classical_dephasing_evolution(const ExperimentParams& params,
                                             const PhaseNoiseSpec& noise,
                                             std::uint64_t seed = 0);

// Analytic (characteristic-function) ensemble average of the same channel.
DensityMatrix classical_dephasing_analytic(const PhaseNoiseSpec& noise);

// Mediator measured in the number basis and re-prepared after each mass
// interaction.
ProtocolResult measured_channel_evolution(const ExperimentParams& params,
                                          const MeasuredChannel& model = {});

// Reads (phi1, delta_phi) off a two-mass path-basis density matrix:
// phi1 = mean cross-branch phase, delta_phi = theta_11 - phi1 (|00> gauge).
// Empty when the needed coherences are below 1e-12.
std::optional<PhasePair> extract_phases(const DensityMatrix& two_mass);

}  // namespace gie
