#include "gie/decoherence.hpp"

#include <cmath>
#include <sstream>

#include "gie/errors.hpp"
#include "gie/quadrature.hpp"

namespace gie {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << ": must be positive and finite, got " << v;
    throw ConfigError(msg.str());
  }
}
}  // namespace

std::complex<double> coherent_shift(double g_k, double omega_k, double T) {
  if (omega_k == 0.0) {
    throw ConfigError("coherent_shift: omega_k must be nonzero");
  }
  const std::complex<double> i(0.0, 1.0);
  return -i * (g_k / omega_k) * (std::exp(i * (omega_k * T)) - 1.0);
}

double decay_factor(const std::vector<std::complex<double>>& shifts,
                    OverlapConvention convention) {
  double sum = 0.0;
  for (const auto& d : shifts) {
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      throw NumericalError("decay_factor: non-finite shift");
    }
    sum += std::norm(d);
  }
  const double s = convention == OverlapConvention::printed ? 1.0 : 2.0;
  return std::exp(-s * sum);
}

double decoherence_rate(const DecoherenceSpec& spec, double T) {
  require_positive(T, "decoherence_rate.T");
  require_positive(spec.Omega, "decoherence_rate.spec.Omega");
  require_positive(spec.c_disp, "decoherence_rate.spec.c_disp");
  if (!spec.g || !spec.rho) {
    throw ConfigError("decoherence_rate: spec.g and spec.rho must be set");
  }

  const double c = spec.c_disp;
  const double k_max = spec.Omega / c;
  const auto integrand = [&](double k) -> double {
    const double g = spec.g(k);
    const double r = spec.rho(k);
    if (r < 0.0) {
      throw ConfigError("decoherence_rate: rho(k) must be non-negative");
    }
    const double w = c * k;
    // sin^2(w T) / w^2 -> T^2 as w -> 0.
    if (std::abs(w * T) < 1e-8) {
      return g * g * r * T * T;
    }
    const double s = std::sin(w * T);
    return g * g * r * s * s / (w * w);
  };
  return adaptive_simpson(integrand, 0.0, k_max, 1e-8);
}

double thermal_rate_estimate(double dE, double dx, double temperature,
                             double Omega, int n,
                             const PhysicalConstants& k) {
  if (dE == 0.0) return 0.0;
  require_positive(dx, "thermal_rate_estimate.dx");
  require_positive(temperature, "thermal_rate_estimate.temperature");
  require_positive(Omega, "thermal_rate_estimate.Omega");
  if (n < 1) {
    throw ConfigError("thermal_rate_estimate: n must be >= 1");
  }
  const double energy_ratio = dE / k.planck_energy();
  return energy_ratio * energy_ratio * std::pow(dx / k.c, n) *
         (k.k_B * temperature / k.hbar()) * std::pow(Omega, n);
}

GravitonEmission graviton_emission_rate(double m, double a, double omega,
                                        const PhysicalConstants& k) {
  require_positive(m, "graviton_emission_rate.m");
  require_positive(a, "graviton_emission_rate.a");
  if (omega < 0.0 || !std::isfinite(omega)) {
    throw ConfigError("graviton_emission_rate: omega must be >= 0");
  }
  GravitonEmission out{};
  if (omega == 0.0) {
    out.dE_dt = 0.0;
    out.gamma_s = 0.0;
    return out;
  }
  out.dE_dt = -k.G * m * m * std::pow(a, 4) * std::pow(omega, 6) /
              std::pow(k.c, 5);
  out.gamma_s = std::abs(out.dE_dt) / (k.hbar() * omega);
  return out;
}

double gravitational_mode_coupling(double V_potential, double x,
                                   double V_volume, double omega_k,
                                   const PhysicalConstants& k) {
  require_positive(V_volume, "gravitational_mode_coupling.V_volume");
  require_positive(omega_k, "gravitational_mode_coupling.omega_k");
  return V_potential * x * x * std::sqrt(16.0 * kPi * k.G * k.hbar()) /
         (4.0 * std::pow(k.c, 3) * std::sqrt(V_volume)) *
         std::pow(omega_k, 1.5);
}

namespace {

// Relative-detuning statistics of quasi-static classical phase noise.
struct RelativeDetuning {
  double variance;  // rad^2/s^2 of the frozen per-shot detuning
};

RelativeDetuning relative_detuning(const ClassicalDephasingNoise& n) {
  const double var = n.sigma_rate_a * n.sigma_rate_a +
                     n.sigma_rate_b * n.sigma_rate_b -
                     2.0 * n.correlation * n.sigma_rate_a * n.sigma_rate_b;
  return RelativeDetuning{std::max(var, 0.0)};
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

struct VisibilityVisitor {
  double T;

  SpinEchoResult operator()(const EntanglingFieldNoise& n) const {
    if (n.mode_omegas.size() != n.mode_couplings.size()) {
      throw ConfigError(
          "spin_echo_experiment: mode_omegas and mode_couplings lengths "
          "differ");
    }
    // One branch couples to the field, the other does not.  The coherent
    // amplitude sourced by a coupling window [t0, t1] and read at time T is
    //   alpha(T) = -(g/w) e^{-i w T} (e^{i w t1} - e^{i w t0}).
    // No echo: the relative shift is the full-window displacement.
    // Echo (branch swap at T/2): branch a couples on [0, T/2], branch b on
    // [T/2, T]; the relative shift becomes (g/w) e^{-i w T}(e^{i w T/2}-1)^2.
    double sum_no_echo = 0.0;
    double sum_echo = 0.0;
    for (std::size_t j = 0; j < n.mode_omegas.size(); ++j) {
      const double w = n.mode_omegas[j];
      const double g = n.mode_couplings[j];
      if (w <= 0.0) {
        throw ConfigError("spin_echo_experiment: mode omega must be > 0");
      }
      const double r = g / w;
      const double half = 0.5 * w * T;
      const double quarter = 0.25 * w * T;
      const double s_half = std::sin(half);
      const double s_quarter = std::sin(quarter);
      sum_no_echo += 4.0 * r * r * s_half * s_half;
      sum_echo += 16.0 * r * r * s_quarter * s_quarter * s_quarter * s_quarter;
    }
    const double s =
        n.convention == OverlapConvention::printed ? 1.0 : 2.0;
    return SpinEchoResult{clamp01(std::exp(-s * sum_no_echo)),
                          clamp01(std::exp(-s * sum_echo))};
  }

  SpinEchoResult operator()(const ClassicalDephasingNoise& n) const {
    // Quasi-static ensemble: the shot-frozen relative detuning delta is
    // Gaussian.  Without echo the coherence is |E[e^{i delta T}]| =
    // exp(-var T^2 / 2); the echo inverts the second half-interval, so the
    // accumulated relative phase cancels exactly for every realization.
    const double var = relative_detuning(n).variance;
    const double vis_free = std::exp(-0.5 * var * T * T);
    return SpinEchoResult{clamp01(vis_free), 1.0};
  }

  SpinEchoResult operator()(const ObjectiveCollapseNoise& n) const {
    if (n.rate < 0.0) {
      throw ConfigError("spin_echo_experiment: collapse rate must be >= 0");
    }
    // Irreversible reduction damps coherence regardless of branch swaps.
    const double vis = std::exp(-n.rate * T);
    return SpinEchoResult{clamp01(vis), clamp01(vis)};
  }
};

}  // namespace

SpinEchoResult spin_echo_experiment(const NoiseModel& noise,
                                    double total_time) {
  require_positive(total_time, "spin_echo_experiment.total_time");
  return std::visit(VisibilityVisitor{total_time}, noise);
}

NoiseClass classify_noise(const SpinEchoResult& r, double hi) {
  const bool free_ok = r.visibility_no_echo >= hi;
  const bool echo_ok = r.visibility_echo >= hi;
  if (free_ok && echo_ok) return NoiseClass::none;
  if (free_ok) return NoiseClass::entangling_field;  // revival spoiled by echo
  if (echo_ok) return NoiseClass::classical_dephasing;
  return NoiseClass::objective_collapse;
}

std::string to_string(NoiseClass c) {
  switch (c) {
    case NoiseClass::none:
      return "none";
    case NoiseClass::classical_dephasing:
      return "classical_dephasing";
    case NoiseClass::entangling_field:
      return "entangling_field";
    case NoiseClass::objective_collapse:
      return "objective_collapse";
  }
  return "unknown";
}

FieldMassEntanglement field_mass_entanglement(double m, double d, double dt,
                                              const PhysicalConstants& k) {
  require_positive(m, "field_mass_entanglement.m");
  require_positive(d, "field_mass_entanglement.d");
  require_positive(dt, "field_mass_entanglement.dt");
  const double ratio = m / k.planck_mass();
  const double xi = ratio * ratio;
  return FieldMassEntanglement{xi, 1.0 - std::exp(-xi)};
}

}  // namespace gie
