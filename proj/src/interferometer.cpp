#include "gie/interferometer.hpp"

#include <cmath>
#include <sstream>

namespace gie {

void validate(const ExperimentParams& p) {
  auto fail = [](const std::string& field, const std::string& why) {
    throw ConfigError("experiment." + field + ": " + why);
  };
  if (!(p.m > 0.0) || !std::isfinite(p.m)) fail("mass_kg", "must be positive and finite");
  if (!(p.d1 > 0.0) || !std::isfinite(p.d1)) fail("d1_m", "must be positive and finite");
  if (!(p.d2 > 0.0) || !std::isfinite(p.d2)) fail("d2_m", "must be positive and finite");
  if (!(p.dt > 0.0) || !std::isfinite(p.dt))
    fail("interaction_time_s", "must be positive and finite");
  if (p.d3 && !(*p.d3 > 0.0)) fail("d3_m", "must be positive when given");
  if (!p.d3 && 2.0 * p.d1 - p.d2 <= 0.0)
    fail("d2_m", "collinear far-pair distance 2*d1 - d2 must be positive");
  if (p.L && !(*p.L > 0.0)) fail("arm_length_m", "must be positive when given");
  if (p.v && !(*p.v > 0.0)) fail("velocity_mps", "must be positive when given");
  if (p.L && p.v) {
    const double implied = *p.L / *p.v;
    if (std::abs(implied - p.dt) > 1e-9 * std::max(implied, p.dt)) {
      std::ostringstream os;
      os << "experiment.interaction_time_s: " << p.dt
         << " inconsistent with arm_length_m/velocity_mps = " << implied;
      throw ConfigError(os.str());
    }
  }
}

double far_pair_distance(const ExperimentParams& p) {
  return p.d3 ? *p.d3 : (2.0 * p.d1 - p.d2);
}

double gravitational_phase(double m, double d, double dt, const PhysicalConstants& c) {
  if (!(d > 0.0)) throw std::invalid_argument("gravitational_phase: d must be positive");
  return c.G * m * m * dt / (c.hbar() * d);
}

double gravitational_phase_planck_form(double m, double d, double dt,
                                       const PhysicalConstants& c) {
  if (!(d > 0.0))
    throw std::invalid_argument("gravitational_phase_planck_form: d must be positive");
  const double ratio = m / c.planck_mass();
  return ratio * ratio * (c.c / d) * dt;
}

double field_mass_entanglement(double m, const PhysicalConstants& c) {
  const double ratio = m / c.planck_mass();
  return ratio * ratio;
}

double linear_entropy_estimate(double m, const PhysicalConstants& c) {
  return 1.0 - std::exp(-field_mass_entanglement(m, c));
}

PhasePair phases_from(const ExperimentParams& p) {
  validate(p);
  const double phi1 = gravitational_phase(p.m, p.d1, p.dt, p.constants);
  const double phi2 = gravitational_phase(p.m, p.d2, p.dt, p.constants);
  double phi1_eff = phi1;
  if (p.include_far_pair) {
    phi1_eff -= gravitational_phase(p.m, far_pair_distance(p), p.dt, p.constants);
  }
  return PhasePair{phi1_eff, phi2 - phi1};
}

double mean_field_phase(double m, double d1, double d2, double dt,
                        const PhysicalConstants& c) {
  return gravitational_phase(m, 0.5 * (d1 + d2), dt, c);
}

Ket branch_state(double phi1, double delta_phi) {
  using namespace std::complex_literals;
  const Complex e1 = std::exp(1i * phi1);
  const Complex e2 = std::exp(1i * (phi1 + delta_phi));
  return ket_from({0.5, 0.5 * e1, 0.5 * e1, 0.5 * e2}, {2, 2});
}

OutputProbabilities output_probabilities(double phi1, double delta_phi) {
  const double c1 = std::cos(0.5 * phi1), cd = std::cos(0.5 * delta_phi);
  const double s1 = std::sin(0.5 * phi1), sd = std::sin(0.5 * delta_phi);
  return OutputProbabilities{0.5 * (c1 * c1 + cd * cd), 0.5 * (s1 * s1 + sd * sd)};
}

namespace {
template <typename State>
Eigen::Matrix2d joint_distribution_impl(const State& s) {
  State after_h = apply_to_subsystem(hadamard(), 0, s);
  after_h = apply_to_subsystem(hadamard(), 1, after_h);
  Eigen::Matrix2d p;
  if constexpr (std::is_same_v<State, Ket>) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p(i, j) = std::norm(after_h.amp[i * 2 + j]);
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p(i, j) = after_h.rho(i * 2 + j, i * 2 + j).real();
  }
  return p;
}
}  // namespace

Eigen::Matrix2d joint_output_distribution(const Ket& two_mass_state) {
  if (two_mass_state.dims != std::vector<int>{2, 2})
    throw std::invalid_argument("joint_output_distribution: expected two qubits");
  return joint_distribution_impl(two_mass_state);
}

Eigen::Matrix2d joint_output_distribution(const DensityMatrix& two_mass_state) {
  if (two_mass_state.dims != std::vector<int>{2, 2})
    throw std::invalid_argument("joint_output_distribution: expected two qubits");
  return joint_distribution_impl(two_mass_state);
}

Mat xz_witness_operator() {
  return kron(pauli_x(), pauli_z()) + kron(pauli_z(), pauli_x());
}

double xz_witness(const DensityMatrix& two_mass) {
  if (two_mass.dim() != 4)
    throw std::invalid_argument("xz_witness: expected two qubits");
  return (xz_witness_operator() * two_mass.rho).trace().real();
}

double xz_witness(const Ket& two_mass) { return xz_witness(to_density(two_mass)); }

std::map<std::string, double> correlation_table(const Ket& two_mass_state) {
  if (two_mass_state.dims != std::vector<int>{2, 2})
    throw std::invalid_argument("correlation_table: expected two qubits");
  const Vec& a = two_mass_state.amp;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto prob = [](Complex amp) { return std::norm(amp); };

  std::map<std::string, double> table;
  const char sign[2] = {'+', '-'};
  for (int i = 0; i < 2; ++i) {
    for (int s = 0; s < 2; ++s) {
      // Mass 1 stays in the path basis; mass 2 is projected on |±>.
      const Complex amp_zx =
          inv_sqrt2 * (a(i * 2 + 0) + (s == 0 ? 1.0 : -1.0) * a(i * 2 + 1));
      table[std::string("p(") + std::to_string(i) + "," + sign[s] + ")"] =
          prob(amp_zx);
      // Transposed reading: mass 1 on |±>, mass 2 in the path basis.
      const Complex amp_xz =
          inv_sqrt2 * (a(0 * 2 + i) + (s == 0 ? 1.0 : -1.0) * a(1 * 2 + i));
      table[std::string("p(") + sign[s] + "," + std::to_string(i) + ")"] =
          prob(amp_xz);
    }
  }
  return table;
}

}  // namespace gie
