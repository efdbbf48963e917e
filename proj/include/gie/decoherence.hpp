#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gie/constants.hpp"

namespace gie {

// ---------------------------------------------------------------------------
// Environment specification for the gravitational decoherence rate integral.
// The field is a continuum of modes with dispersion omega = c_disp * k,
// mode coupling g(k), and density of states rho(k), integrated up to the
// angular-frequency cutoff Omega (i.e. k up to Omega / c_disp).
// ---------------------------------------------------------------------------
struct DecoherenceSpec {
  std::function<double(double)> g;    // coupling g(k), argument in 1/m
  std::function<double(double)> rho;  // density of states rho(k) >= 0
  double Omega = 0.0;                 // frequency cutoff, rad/s
  int n = 1;                          // dimensional-scaling exponent
  double temperature = 0.0;           // K
  double c_disp = constants.c;        // dispersion speed, omega = c_disp * k
};

// Off-diagonal suppression convention for a branch-conditioned field shift.
//  - printed: reduce by exp(-sum |delta alpha|^2)  (one branch shifted)
//  - symmetric_branching: reduce by exp(-2 sum |delta alpha|^2)  (branches
//    shifted to +delta and -delta; overlap |<a-d|a+d>| = exp(-2|d|^2))
enum class OverlapConvention { printed, symmetric_branching };

// delta_alpha = -i (g_k / omega_k) (e^{i omega_k T} - 1): the displacement a
// branch imprints on field mode k after evolving for time T.
std::complex<double> coherent_shift(double g_k, double omega_k, double T);

// exp(-s * sum_k |delta_k|^2), s = 1 (printed) or 2 (symmetric_branching).
double decay_factor(const std::vector<std::complex<double>>& shifts,
                    OverlapConvention convention = OverlapConvention::printed);

// gamma / T = integral_0^{Omega/c} dk g(k)^2 rho(k) sin^2(omega_k T) /
// omega_k^2, evaluated by adaptive quadrature (relative tolerance 1e-8).
double decoherence_rate(const DecoherenceSpec& spec, double T);

// Dimensional-analysis estimate
//   gamma ~ (dE / E_P)^2 (dx / c)^n (k_B T / hbar) Omega^n.
double thermal_rate_estimate(double dE, double dx, double temperature,
                             double Omega, int n,
                             const PhysicalConstants& k = constants);

struct GravitonEmission {
  double dE_dt;    // quadrupole radiated power, W (negative: energy loss)
  double gamma_s;  // spontaneous emission rate |dE/dt| / (hbar omega), 1/s
};

// Quadrupole emission of an oscillating mass: dE/dt = -G m^2 a^4 omega^6/c^5.
GravitonEmission graviton_emission_rate(double m, double a, double omega,
                                        const PhysicalConstants& k = constants);

// Mode coupling of a trapped mass to the gravitational field:
//   g_k = V(x) x^2 sqrt(16 pi G hbar) / (4 c^3 sqrt(V)) * omega_k^{3/2},
// with V_potential the trapping-potential scale at x and V_volume the
// quantization volume.
double gravitational_mode_coupling(double V_potential, double x,
                                   double V_volume, double omega_k,
                                   const PhysicalConstants& k = constants);

// ---------------------------------------------------------------------------
// Noise models feeding the spin-echo discriminator.
// ---------------------------------------------------------------------------

// Branch-conditioned coupling to real field modes: coherence loss is
// entanglement with the environment and revives when the field states merge.
struct EntanglingFieldNoise {
  std::vector<double> mode_omegas;     // rad/s (natural-unit scale)
  std::vector<double> mode_couplings;  // g_k, same units as omega
  OverlapConvention convention = OverlapConvention::printed;
};

// Stochastic local phases, frozen per experimental shot (quasi-static).
// sigma_rate_* are standard deviations of the branch phase-accumulation
// rates (rad/s); correlation is Pearson's rho between the two branches;
// deterministic_rate adds a fixed relative detuning (rad/s).
struct ClassicalDephasingNoise {
  double sigma_rate_a = 0.0;
  double sigma_rate_b = 0.0;
  double correlation = 1.0;
  double deterministic_rate = 0.0;
};

// Irreversible position-basis reduction at a fixed rate.
struct ObjectiveCollapseNoise {
  double rate = 0.0;  // 1/s
};

using NoiseModel = std::variant<EntanglingFieldNoise, ClassicalDephasingNoise,
                                ObjectiveCollapseNoise>;

struct SpinEchoResult {
  double visibility_no_echo;  // in [0, 1]
  double visibility_echo;     // in [0, 1]
};

// Evolves one superposed mass under the noise model for total_time, with and
// without a branch swap at total_time / 2, and returns the interference
// visibilities (p_max - p_min) / (p_max + p_min) of the final phase scan.
SpinEchoResult spin_echo_experiment(const NoiseModel& noise, double total_time);

enum class NoiseClass {
  none,                 // both visibilities high: no effective noise
  classical_dephasing,  // echo recovers what free evolution lost
  entangling_field,     // recombination recovers; echo spoils the revival
  objective_collapse    // nothing recovers
};

// Threshold classifier over the two visibilities (hi = "recovered").
NoiseClass classify_noise(const SpinEchoResult& r, double hi = 0.9);
std::string to_string(NoiseClass c);

struct FieldMassEntanglement {
  double xi;                      // (m / m_P)^2
  double linear_entropy_estimate; // 1 - exp(-xi)
};

// Residual mass-field entanglement scale for a mass m on paths separated by
// d over time dt.  The leading dependence is xi = (m / m_P)^2; d and dt are
// validated for positivity (they set the regime, not the leading number).
FieldMassEntanglement field_mass_entanglement(double m, double d, double dt,
                                              const PhysicalConstants& k =
                                                  constants);

}  // namespace gie
