#include "gie/feasibility.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "gie/errors.hpp"
#include "gie/mediator.hpp"
#include "gie/units.hpp"

namespace gie {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double x, const char* field) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ConfigError(std::string(field) + ": must be > 0 and finite");
  }
}

void require_nonnegative(double x, const char* field) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw ConfigError(std::string(field) + ": must be >= 0 and finite");
  }
}

std::string format_sci(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

GravitoEmForces gravito_em_forces(double M, double r, double v,
                                  const PhysicalConstants& k,
                                  bool literal_prefactors) {
  require_positive(M, "gravito_em.mass_kg");
  require_positive(r, "gravito_em.r_m");
  require_nonnegative(v, "gravito_em.velocity_mps");

  GravitoEmForces out;
  out.relativistic_warning = v > 0.1 * k.c;

  if (literal_prefactors) {
    // As printed: E_G = (1/eps_G) M / r^2 with eps_G = 1/(4 pi G), and
    // B_G = mu_G I / r. The B_G form is dimensionally inhomogeneous (one
    // power of r short); it is kept verbatim for comparison.
    out.e_field = 4.0 * kPi * k.G * M / (r * r);
    out.b_field = (4.0 * k.G / (k.c * k.c)) * (M * v) / r;
    out.f_electric = M * out.e_field;
    out.f_magnetic = M * v * out.b_field;
    return out;
  }

  // Coulomb-analog point-source convention; every line is dimension-checked
  // at compile time through the unit tags.
  using namespace units;
  const GravConstant G = grav_constant(k);
  const Velocity c = light_speed(k);
  const Mass mass{M};
  const Length dist{r};
  const Velocity vel{v};

  const Acceleration e_g = G * mass / (dist * dist);
  const auto mu_g = 4.0 * G / (c * c);          // m / kg
  const auto current = mass * vel;              // kg m / s
  const Frequency b_g = mu_g * current / (dist * dist);
  const Force f_e = mass * e_g;
  const Force f_b = mass * vel * b_g;

  out.e_field = e_g.value();
  out.b_field = b_g.value();
  out.f_electric = f_e.value();
  out.f_magnetic = f_b.value();
  return out;
}

double christoffel_uncertainty_bound(double L, const PhysicalConstants& k) {
  require_positive(L, "christoffel_bound.region_m");
  using namespace units;
  const Length lp = planck_length(k);
  const Length region{L};
  const auto bound =
      (lp * lp) / (region * region * region * region);  // 1 / m^2
  return bound.value();
}

double em_uncertainty_bound(double L, const PhysicalConstants& k) {
  require_positive(L, "em_bound.region_m");
  using namespace units;
  const Length region{L};
  const auto bound = reduced_planck(k) * light_speed(k) /
                     (region * region * region * region);  // J / m^3
  return bound.value();
}

FeasibilityReport baym_ozawa_check(double m, double R, double d, double L,
                                   double v, const PhysicalConstants& k) {
  require_positive(m, "baym_ozawa.mass_kg");
  require_positive(R, "baym_ozawa.probe_radius_m");
  require_positive(d, "baym_ozawa.arm_separation_m");
  require_positive(L, "baym_ozawa.flight_length_m");
  require_positive(v, "baym_ozawa.velocity_mps");

  using namespace units;
  const Mass mp = planck_mass(k);
  const Dimensionless mass_ratio_sq = (Mass{m} / mp) * (Mass{m} / mp);
  const Dimensionless size_ratio_sq = (Length{R} / Length{d}) * (Length{R} / Length{d});
  const Length fringe =
      reduced_planck(k) / (Mass{m} * Velocity{v}) * (Length{L} / Length{d});
  const Length lp = planck_length(k);

  FeasibilityReport rep;
  rep.constants_provenance = k.provenance;
  rep.values["mass_ratio_sq"] = {mass_ratio_sq.value(), "1"};
  rep.values["size_ratio_sq"] = {size_ratio_sq.value(), "1"};
  rep.values["fringe_separation_m"] = {fringe.value(), "m"};
  rep.values["planck_length_m"] = {lp.value(), "m"};

  const bool which_path = mass_ratio_sq.value() >= size_ratio_sq.value();
  rep.flags["which_path_condition"] = which_path;
  rep.flags["fringes_unobservable"] =
      which_path && fringe.value() <= lp.value();
  if (!(d <= 0.1 * R)) {
    rep.notes.push_back(
        "arm separation d = " + format_sci(d) +
        " m is not small compared to the probe size R = " + format_sci(R) +
        " m; the which-path geometry assumes d << R");
  }
  return rep;
}

double peres_rosen_time(double m, double s, const PhysicalConstants& k) {
  require_positive(m, "peres_rosen.mass_kg");
  require_positive(s, "peres_rosen.separation_m");
  using namespace units;
  const Duration t = Mass{m} * Length{s} * Length{s} / reduced_planck(k);
  return t.value();
}

double cow_phase(double lambda, double A, double tilt, double m_n, double g,
                 const PhysicalConstants& k) {
  require_positive(lambda, "cow.wavelength_m");
  require_positive(A, "cow.loop_area_m2");
  require_positive(m_n, "cow.neutron_mass_kg");
  require_nonnegative(g, "cow.gravity_mps2");
  if (!std::isfinite(tilt)) throw ConfigError("cow.tilt_rad: must be finite");
  // Evaluated exactly as printed (first power of the mass over h squared);
  // the expression is kept verbatim rather than dimension-tagged.
  return 2.0 * kPi * g * m_n * lambda * A * std::sin(tilt) / (k.h * k.h);
}

MassSuperpositionResult mass_superposition_phases(double theta, double E1,
                                                  double E2, double m1,
                                                  double m2, double d,
                                                  double dt,
                                                  const PhysicalConstants& k) {
  require_positive(m1, "mass_superposition.m1_kg");
  require_positive(m2, "mass_superposition.m2_kg");
  require_positive(d, "mass_superposition.d_m");
  require_nonnegative(dt, "mass_superposition.dt_s");
  if (!std::isfinite(E1) || !std::isfinite(E2)) {
    throw ConfigError("mass_superposition.energy_j: must be finite");
  }
  if (!std::isfinite(theta)) {
    throw ConfigError("mass_superposition.theta_rad: must be finite");
  }

  const double w[2] = {std::cos(theta), std::sin(theta)};
  const double energies[2] = {E1, E2};
  const double masses[2] = {m1, m2};
  const double hbar = k.hbar();

  Vec amp(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double phase =
          ((energies[i] + energies[j]) / hbar +
           k.G * masses[i] * masses[j] / (hbar * d)) *
          dt;
      amp(i * 2 + j) = w[i] * w[j] * std::exp(Complex(0.0, phase));
    }
  }

  MassSuperpositionResult out;
  out.state = ket_from(amp, {2, 2});
  assert_valid(out.state);
  out.negativity = negativity(to_density(out.state), 1);
  return out;
}

double sagnac_phase(double m, double Omega, double A,
                    const PhysicalConstants& k) {
  require_positive(m, "sagnac.mass_kg");
  require_nonnegative(Omega, "sagnac.rotation_rate_radps");
  require_positive(A, "sagnac.loop_area_m2");
  using namespace units;
  const Dimensionless phi =
      2.0 * Mass{m} * Frequency{Omega} * Area{A} / reduced_planck(k);
  return phi.value();
}

FeasibilityReport plan(const ExperimentParams& params,
                       const DecoherenceSpec& budget, double slack) {
  validate(params);
  if (!(slack >= 0.0 && slack < 1.0)) {
    throw ConfigError("plan.slack: must lie in [0, 1)");
  }

  const PhysicalConstants& k = params.constants;
  const double phi_close =
      gravitational_phase(params.m, params.d2, params.dt, k);
  const PhasePair phases = phases_from(params);
  const double xi = field_mass_entanglement(params.m, k);
  const double t_collapse = penrose_collapse_time(params.m, params.d2, k);

  double gamma = 0.0;
  bool budget_given = static_cast<bool>(budget.g) &&
                      static_cast<bool>(budget.rho) && budget.Omega > 0.0;
  FeasibilityReport rep;
  rep.constants_provenance = k.provenance;
  if (budget_given) {
    gamma = decoherence_rate(budget, params.dt);
  } else {
    rep.notes.push_back(
        "no decoherence budget provided; environmental rate treated as 0");
  }

  const double threshold = kPi * (1.0 - slack);
  rep.values["gravitational_phase_rad"] = {phi_close, "rad"};
  rep.values["delta_phase_rad"] = {phases.delta_phi, "rad"};
  rep.values["xi"] = {xi, "1"};
  rep.values["penrose_collapse_time_s"] = {t_collapse, "s"};
  rep.values["decoherence_rate_hz"] = {gamma, "1/s"};
  rep.values["phase_threshold_rad"] = {threshold, "rad"};
  rep.values["decoherence_exponent"] = {gamma * params.dt, "1"};

  const bool phase_ok = phi_close >= threshold;
  const bool deco_ok = gamma * params.dt <= 1.0;
  rep.flags["phase_feasible"] = phase_ok;
  rep.flags["decoherence_ok"] = deco_ok;
  rep.flags["feasible"] = phase_ok && deco_ok;

  rep.notes.push_back("phase criterion: phase at closest approach >= pi*(1-" +
                      format_sci(slack) + ") = " + format_sci(threshold) +
                      " rad");
  if (params.dt > t_collapse) {
    rep.notes.push_back(
        "interaction time exceeds the objective-collapse timescale " +
        format_sci(t_collapse) + " s; a collapse-type mediator would damp "
        "the coherences before recombination");
  }
  return rep;
}

}  // namespace gie
