#include "gie/mediator.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gie/cvhybrid.hpp"

namespace gie {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
const std::complex<double> kI(0.0, 1.0);

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

// (omega t - sin(omega t)) / omega^2: the secular-plus-transient phase kernel.
double phase_kernel(double omega, double t) {
  const double x = omega * t;
  if (std::abs(x) < 1e-4) {
    // (x - sin x)/x^2 * t^2/x * ... series: (x^3/6 - x^5/120)/omega^2
    return (x * x * x / 6.0 - x * x * x * x * x / 120.0) / (omega * omega);
  }
  return (x - std::sin(x)) / (omega * omega);
}

// 4 sin^2(omega t / 2) / omega^2: the coherent-displacement magnitude kernel.
double displacement_kernel(double omega, double t) {
  const double s = std::sin(0.5 * omega * t);
  return 4.0 * s * s / (omega * omega);
}

}  // namespace

Eigen::Matrix2d branch_phase_table(const ExperimentParams& p) {
  validate(p);
  const double d3 = far_pair_distance(p);
  Eigen::Matrix2d theta;
  theta(0, 0) = gravitational_phase(p.m, d3, p.dt, p.constants);
  theta(0, 1) = gravitational_phase(p.m, p.d1, p.dt, p.constants);
  theta(1, 0) = theta(0, 1);
  theta(1, 1) = gravitational_phase(p.m, p.d2, p.dt, p.constants);
  return theta;
}

void collinear_positions(const ExperimentParams& p, std::array<double, 2>* x1,
                         std::array<double, 2>* x2) {
  const double d3 = far_pair_distance(p);
  (*x1) = {0.0, d3 - p.d1};
  (*x2) = {d3, p.d1};
}

// ---------------------------------------------------------------------------
// Gate model
// ---------------------------------------------------------------------------

namespace {

// Exact branch evolution of the displaced-oscillator generator
// H/omega = n_hat + conj(beta) a + beta a†  with beta = i sqrt(xi):
//   exp(-i w H/omega) = e^{i w |beta|^2} D(beta)† e^{-i w n_hat} D(beta).
// The c-number e^{i w xi} carries the secular (well-depth) branch phase; the
// rotation e^{-i w n_hat} is applied through its angle reduced mod 2 pi so
// that integer numbers of turns are exact.
std::vector<Vec> gate_branch_fields(std::complex<double> alpha,
                                    const Eigen::Matrix2d& xi, double w,
                                    int cutoff, double inelasticity) {
  if (cutoff < 2) throw ConfigError("gate model: cutoff must be >= 2");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (!(xi(a, b) >= 0.0) || !std::isfinite(xi(a, b)))
        throw ConfigError("gate model: xi entries must be >= 0 and finite");

  const double turns = std::round(w / kTwoPi);
  const double theta_rot = w - kTwoPi * turns;  // exactly 0 for snapped w

  const Vec coh = coherent_state(alpha, cutoff).amp;
  Mat rot = Mat::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    rot(n, n) = std::exp(-kI * (theta_rot * n));
  }

  std::vector<Vec> fields(4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const std::complex<double> beta = kI * std::sqrt(xi(a, b));
      const Mat d = displacement_operator(beta, cutoff);
      Vec v = d * coh;
      v = rot * v;
      v = d.adjoint() * v;
      v *= std::exp(kI * (w * xi(a, b)));
      if (inelasticity != 0.0) {
        v = displacement_operator(inelasticity * beta, cutoff) * v;
      }
      fields[a * 2 + b] = std::move(v);
    }
  }
  return fields;
}

Ket assemble_gate_state(const std::vector<Vec>& fields, int cutoff) {
  const int nf = cutoff + 1;
  Vec amp = Vec::Zero(4 * nf);
  for (int br = 0; br < 4; ++br) {
    amp.segment(br * nf, nf) = 0.5 * fields[br];
  }
  Ket joint{std::move(amp), {2, 2, nf}};
  assert_valid(joint);
  return joint;
}

}  // namespace

Ket gate_model_evolution(std::complex<double> alpha, const Eigen::Matrix2d& xi,
                         double w, int cutoff) {
  return assemble_gate_state(gate_branch_fields(alpha, xi, w, cutoff, 0.0),
                             cutoff);
}

// ---------------------------------------------------------------------------
// Explicit-mode field model
// ---------------------------------------------------------------------------

Ket lqg_exact_evolution(const LqgField& model, double t) {
  const std::size_t modes = model.mode_freqs.size();
  if (modes == 0) {
    throw ConfigError(
        "lqg_exact_evolution: mode list is empty (the continuum engine is "
        "selected through run_protocol)");
  }
  if (model.couplings.size() != modes) {
    throw ConfigError(
        "lqg_exact_evolution: couplings must match mode_freqs in length");
  }
  if (modes > 3) {
    throw ConfigError(
        "lqg_exact_evolution: at most 3 explicit modes are supported");
  }
  if (model.cutoff < 2) {
    throw ConfigError("lqg_exact_evolution: cutoff must be >= 2");
  }
  if (!(model.wave_speed > 0.0)) {
    throw ConfigError("lqg_exact_evolution: wave_speed must be positive");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ConfigError("lqg_exact_evolution: t must be >= 0 and finite");
  }

  const int nf = model.cutoff + 1;
  std::vector<int> dims{2, 2};
  int field_dim = 1;
  for (std::size_t k = 0; k < modes; ++k) {
    dims.push_back(nf);
    field_dim *= nf;
  }

  Vec amp = Vec::Zero(4 * field_dim);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double phase = 0.0;
      Vec field = Vec::Ones(1);
      for (std::size_t k = 0; k < modes; ++k) {
        const double omega = model.mode_freqs[k];
        if (!(omega > 0.0)) {
          throw ConfigError("lqg_exact_evolution: mode_freqs must be > 0");
        }
        const double g = model.couplings[k];
        const double wavenumber = omega / model.wave_speed;
        const std::complex<double> mu =
            g * (std::exp(kI * (wavenumber * model.x1[a])) +
                 std::exp(kI * (wavenumber * model.x2[b])));
        phase += std::norm(mu) * phase_kernel(omega, t);
        const std::complex<double> beta =
            (std::conj(mu) / omega) * (1.0 - std::exp(-kI * (omega * t)));
        const Vec mode_amp = coherent_state(beta, model.cutoff).amp;
        Vec next(field.size() * nf);
        for (Eigen::Index i = 0; i < field.size(); ++i) {
          next.segment(i * nf, nf) = field(i) * mode_amp;
        }
        field = std::move(next);
      }
      amp.segment((a * 2 + b) * field_dim, field_dim) =
          0.5 * std::exp(kI * phase) * field;
    }
  }

  Ket joint{std::move(amp), dims};
  std::vector<int> fock_subsystems;
  for (std::size_t k = 0; k < modes; ++k) {
    fock_subsystems.push_back(static_cast<int>(2 + k));
  }
  certify_truncation(joint, fock_subsystems);
  assert_valid(joint, 1e-9);  // coherent tails shave a little norm
  return joint;
}

// ---------------------------------------------------------------------------
// Continuum (radial-shell) engine
// ---------------------------------------------------------------------------

ContinuumBranchTable lqg_continuum_branch_table(const ExperimentParams& p,
                                                const LqgField& model,
                                                double t) {
  validate(p);
  const double d3 = far_pair_distance(p);
  if (p.d3 &&
      std::abs((2.0 * p.d1 - *p.d3) - p.d2) > 1e-12 * std::max(p.d1, p.d2)) {
    throw ConfigError(
        "mediator.lqg_continuum: explicit d3_m breaks the collinear geometry "
        "(expected d3_m = 2*d1_m - d2_m)");
  }
  if (model.shells < 10) {
    throw ConfigError("mediator.lqg_continuum: shells must be >= 10");
  }

  std::array<double, 2> x1{}, x2{};
  collinear_positions(p, &x1, &x2);
  const double c = model.wave_speed;
  const double hbar = p.constants.hbar();
  const double d_min = std::min({p.d1, p.d2, d3});
  const double k_max = model.k_max_times_min_distance / d_min;
  const double dk = k_max / model.shells;

  // Branch pair distances, indexed [a][b].
  double dist[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) dist[a][b] = std::abs(x2[b] - x1[a]);
  const double r11 = std::abs(x1[0] - x1[1]);
  const double r22 = std::abs(x2[0] - x2[1]);

  Eigen::Matrix2d theta = Eigen::Matrix2d::Zero();
  Eigen::Matrix4d gamma = Eigen::Matrix4d::Zero();

  const double weight_scale = p.constants.G * p.m * p.m * c / (kPi * hbar);
  for (int j = 0; j < model.shells; ++j) {
    const double k = (j + 0.5) * dk;
    const double omega = c * k;
    const double g2 = weight_scale * k * dk;  // shell coupling weight G_j^2
    const double pk = phase_kernel(omega, t);
    const double dkern = displacement_kernel(omega, t);

    // Angular-averaged branch phases: |mu|^2 -> 2 G^2 (1 + sinc(k d_ab)).
    // The "+1" self-energy piece is branch independent and dropped (global
    // phase); only the pair term contributes to relative phases.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        theta(a, b) += 2.0 * g2 * sinc(k * dist[a][b]) * pk;

    // Pairwise coherence exponents: |Delta beta|^2 summed over the shell,
    // with the angular average expanded in the six pairwise distances.
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int ap = 0; ap < 2; ++ap) {
          for (int bp = 0; bp < 2; ++bp) {
            const int row = a * 2 + b, col = ap * 2 + bp;
            if (col <= row) continue;  // symmetric, diagonal is zero
            double avg = 0.0;
            if (a != ap) avg += 2.0 - 2.0 * sinc(k * r11);
            if (b != bp) avg += 2.0 - 2.0 * sinc(k * r22);
            if (a != ap && b != bp) {
              avg += 2.0 * (sinc(k * dist[a][b]) - sinc(k * dist[a][bp]) -
                            sinc(k * dist[ap][b]) + sinc(k * dist[ap][bp]));
            } else if (a != ap) {
              // u2 = 0; cross term vanishes.
            } else if (b != bp) {
              // u1 = 0; cross term vanishes.
            }
            const double contrib = 0.5 * dkern * g2 * std::max(avg, 0.0);
            gamma(row, col) += contrib;
            gamma(col, row) += contrib;
          }
        }
      }
    }
  }

  const double theta00 = theta(0, 0);
  theta.array() -= theta00;
  return ContinuumBranchTable{theta, gamma};
}

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

double lqg_newtonian_limit_phase(double m, double separation, double t,
                                 const PhysicalConstants& c) {
  return gravitational_phase(m, separation, t, c);
}

double penrose_collapse_time(double m, double d, const PhysicalConstants& c) {
  if (!(m > 0.0)) throw ConfigError("penrose_collapse_time: m must be > 0");
  if (!(d > 0.0)) throw ConfigError("penrose_collapse_time: d must be > 0");
  return c.hbar() * d / (c.G * m * m);
}

std::optional<PhasePair> extract_phases(const DensityMatrix& two_mass) {
  if (two_mass.dim() != 4) {
    throw std::invalid_argument("extract_phases: expected two qubits");
  }
  const Complex c01 = two_mass.rho(1, 0);
  const Complex c10 = two_mass.rho(2, 0);
  const Complex c11 = two_mass.rho(3, 0);
  if (std::abs(c01) < 1e-12 || std::abs(c10) < 1e-12 ||
      std::abs(c11) < 1e-12) {
    return std::nullopt;
  }
  const double theta01 = std::arg(c01);
  const double theta10 = std::arg(c10);
  const double theta11 = std::arg(c11);
  const double phi1 = 0.5 * (theta01 + theta10);
  return PhasePair{phi1, theta11 - phi1};
}

// ---------------------------------------------------------------------------
// Classical engines
// ---------------------------------------------------------------------------

namespace {

Ket product_phase_ket(double chi1, double chi2) {
  const Complex e1 = std::exp(kI * chi1);
  const Complex e2 = std::exp(kI * chi2);
  return ket_from({0.5, 0.5 * e2, 0.5 * e1, 0.5 * e1 * e2}, {2, 2});
}

// Per-mass relative local phases under a field sourced by the other mass's
// mean position.
std::array<double, 2> mean_field_local_phases(const ExperimentParams& p) {
  std::array<double, 2> x1{}, x2{};
  collinear_positions(p, &x1, &x2);
  const double mid1 = 0.5 * (x1[0] + x1[1]);
  const double mid2 = 0.5 * (x2[0] + x2[1]);
  auto phase_at = [&](double distance) {
    return gravitational_phase(p.m, distance, p.dt, p.constants);
  };
  const double chi1 = phase_at(std::abs(mid2 - x1[1])) -
                      phase_at(std::abs(mid2 - x1[0]));
  const double chi2 = phase_at(std::abs(mid1 - x2[1])) -
                      phase_at(std::abs(mid1 - x2[0]));
  return {chi1, chi2};
}

}  // namespace

ProtocolResult collapse_channel_evolution(const ExperimentParams& params,
                                          double rate, int steps) {
  validate(params);
  if (rate < 0.0) {
    throw ConfigError("mediator.collapse.rate_hz: must be >= 0");
  }
  if (steps < 1) {
    throw ConfigError("mediator.collapse.steps: must be >= 1");
  }

  const Eigen::Matrix2d theta = branch_phase_table(params);
  const double dt_step = params.dt / steps;

  // Elementwise one-step multiplier: branch-phase rotation plus per-mass
  // position dephasing.
  Mat multiplier(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) {
          const double dphase = (theta(a, b) - theta(ap, bp)) / steps;
          const int flips = (a != ap ? 1 : 0) + (b != bp ? 1 : 0);
          multiplier(a * 2 + b, ap * 2 + bp) =
              std::exp(kI * dphase) * std::exp(-rate * dt_step * flips);
        }

  Mat rho = Mat::Constant(4, 4, 0.25);  // |++><++|
  ProtocolResult out;
  const int snapshot_every = std::max(1, steps / 10);
  for (int s = 1; s <= steps; ++s) {
    rho = rho.cwiseProduct(multiplier);
    if (s % snapshot_every == 0 || s == steps) {
      out.trajectory.emplace_back(s * dt_step,
                                  density_from(rho, {2, 2}));
    }
  }

  out.final_two_mass_state = density_from(rho, {2, 2});
  assert_valid(out.final_two_mass_state);
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

DensityMatrix classical_dephasing_analytic(const PhaseNoiseSpec& noise) {
  const double s1 = noise.sigmas[0], s2 = noise.sigmas[1];
  const double m1 = noise.means[0], m2 = noise.means[1];
  const double rho_c = noise.correlation;
  if (std::abs(rho_c) > 1.0) {
    throw ConfigError("mediator.noise.correlation: must lie in [-1, 1]");
  }
  Mat rho(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) {
          const double da = a - ap, db = b - bp;
          const double mean_arg = da * m1 + db * m2;
          const double var = da * da * s1 * s1 + db * db * s2 * s2 +
                             2.0 * da * db * rho_c * s1 * s2;
          rho(a * 2 + b, ap * 2 + bp) =
              0.25 * std::exp(kI * mean_arg) * std::exp(-0.5 * var);
        }
  DensityMatrix out = density_from(rho, {2, 2});
  assert_valid(out);
  return out;
}

ProtocolResult classical_dephasing_evolution(const ExperimentParams& params,
                                             const PhaseNoiseSpec& noise,
                                             std::uint64_t seed) {
  validate(params);
  if (noise.draws < 1) {
    throw ConfigError("mediator.noise.draws: must be >= 1");
  }
  if (std::abs(noise.correlation) > 1.0) {
    throw ConfigError("mediator.noise.correlation: must lie in [-1, 1]");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double rc = noise.correlation;
  const double ortho = std::sqrt(std::max(0.0, 1.0 - rc * rc));

  ProtocolResult out;
  Mat avg = Mat::Zero(4, 4);
  for (int i = 0; i < noise.draws; ++i) {
    const double z1 = gauss(rng);
    const double z2 = gauss(rng);
    const double chi1 = noise.means[0] + noise.sigmas[0] * z1;
    const double chi2 = noise.means[1] + noise.sigmas[1] * (rc * z1 + ortho * z2);
    const Ket draw = product_phase_ket(chi1, chi2);
    const DensityMatrix draw_dm = to_density(draw);
    avg += draw_dm.rho;
    out.trajectory.emplace_back(params.dt, draw_dm);
  }
  avg /= static_cast<double>(noise.draws);
  out.final_two_mass_state = density_from(avg, {2, 2});
  assert_valid(out.final_two_mass_state);
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

ProtocolResult measured_channel_evolution(const ExperimentParams& params,
                                          const MeasuredChannel& model) {
  validate(params);
  if (model.cutoff < 2) {
    throw ConfigError("mediator.measured.cutoff: must be >= 2");
  }
  const int nf = model.cutoff + 1;
  const double xi = field_mass_entanglement(params.m, params.constants);
  const std::complex<double> u = kI * (model.strength * std::sqrt(xi));

  // Initial product state (|+>|+>) ⊗ |alpha0>.
  const Ket plus = ket_from({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {2});
  const Ket field0 = coherent_state(model.alpha, model.cutoff);
  Ket joint0 = tensor(tensor(plus, plus), field0);
  DensityMatrix rho = to_density(joint0);
  rho.dims = {2, 2, nf};

  auto conditional_displacement = [&](int mass) -> Mat {
    const Mat d = displacement_operator(u, model.cutoff);
    const Mat id_f = identity(nf);
    Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const Mat id2 = identity(2);
    if (mass == 0) {
      return kron(p0, kron(id2, id_f)) + kron(p1, kron(id2, d));
    }
    return kron(id2, kron(p0, id_f)) + kron(id2, kron(p1, d));
  };

  // Number-basis measurement (unread): zero every field off-diagonal.
  auto dephase_field = [&](DensityMatrix* r) {
    for (int row = 0; row < r->dim(); ++row) {
      for (int col = 0; col < r->dim(); ++col) {
        if (row % nf != col % nf) r->rho(row, col) = 0.0;
      }
    }
  };

  ProtocolResult out;
  auto snapshot = [&](double time) {
    out.trajectory.emplace_back(time, partial_trace(rho, {0, 1}));
  };

  snapshot(0.0);
  rho = gie::apply(conditional_displacement(0), rho);
  snapshot(0.25 * params.dt);
  dephase_field(&rho);
  snapshot(0.5 * params.dt);
  rho = gie::apply(conditional_displacement(1), rho);
  snapshot(0.75 * params.dt);
  dephase_field(&rho);
  snapshot(params.dt);

  out.final_two_mass_state = partial_trace(rho, {0, 1});
  out.field_state = partial_trace(rho, {2});
  assert_valid(out.final_two_mass_state);
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

// ---------------------------------------------------------------------------
// Protocol dispatch
// ---------------------------------------------------------------------------

namespace {

ProtocolResult run_gate_model(const GateModel& model,
                              const ExperimentParams& params) {
  const Eigen::Matrix2d theta = branch_phase_table(params);
  double w;
  if (model.w) {
    w = *model.w;
    if (!(w > 0.0)) throw ConfigError("mediator.gate.w: must be > 0");
  } else {
    const double w_raw = params.constants.c * params.dt / params.d1;
    const double turns = std::max(1.0, std::round(w_raw / kTwoPi));
    w = kTwoPi * turns;
  }
  const Eigen::Matrix2d xi = theta / w;

  ProtocolResult out;
  for (int j = 0; j <= 4; ++j) {
    const double wj = w * j / 4.0;
    const Ket joint = assemble_gate_state(
        gate_branch_fields(model.alpha, xi, wj, model.cutoff,
                           j == 4 ? model.inelasticity : 0.0),
        model.cutoff);
    certify_truncation(joint, {2});
    if (j == 4) {
      out.final_two_mass_state = partial_trace(joint, {0, 1});
      out.field_state = partial_trace(joint, {2});
    }
    out.trajectory.emplace_back(params.dt * j / 4.0,
                                partial_trace(joint, {0, 1}));
  }
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

ProtocolResult run_lqg(const LqgField& model, const ExperimentParams& params) {
  if (model.mode_freqs.empty()) {
    ProtocolResult out;
    for (int j = 1; j <= 4; ++j) {
      const double t = params.dt * j / 4.0;
      const ContinuumBranchTable table =
          lqg_continuum_branch_table(params, model, t);
      Mat rho(4, 4);
      for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
          const double dphase = table.phase(row / 2, row % 2) -
                                table.phase(col / 2, col % 2);
          rho(row, col) = 0.25 * std::exp(kI * dphase) *
                          std::exp(-table.coherence_exponent(row, col));
        }
      }
      DensityMatrix snapshot = density_from(rho, {2, 2});
      assert_valid(snapshot);
      out.trajectory.emplace_back(t, snapshot);
      if (j == 4) out.final_two_mass_state = std::move(snapshot);
    }
    out.phases_extracted = extract_phases(out.final_two_mass_state);
    return out;
  }

  LqgField local = model;
  const bool default_positions = local.x1 == std::array<double, 2>{0.0, 0.0} &&
                                 local.x2 == std::array<double, 2>{0.0, 0.0};
  if (default_positions) {
    collinear_positions(params, &local.x1, &local.x2);
  }

  ProtocolResult out;
  std::vector<int> field_subsystems;
  for (std::size_t k = 0; k < local.mode_freqs.size(); ++k) {
    field_subsystems.push_back(static_cast<int>(2 + k));
  }
  for (int j = 0; j <= 4; ++j) {
    const double t = params.dt * j / 4.0;
    const Ket joint = lqg_exact_evolution(local, t);
    out.trajectory.emplace_back(t, partial_trace(joint, {0, 1}));
    if (j == 4) {
      out.final_two_mass_state = partial_trace(joint, {0, 1});
      out.field_state = partial_trace(joint, field_subsystems);
    }
  }
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

ProtocolResult run_mean_field(const ExperimentParams& params) {
  const auto chi = mean_field_local_phases(params);
  ProtocolResult out;
  for (int j = 1; j <= 4; ++j) {
    const double f = j / 4.0;
    const DensityMatrix snap =
        to_density(product_phase_ket(chi[0] * f, chi[1] * f));
    out.trajectory.emplace_back(params.dt * f, snap);
    if (j == 4) out.final_two_mass_state = snap;
  }
  out.phases_extracted = extract_phases(out.final_two_mass_state);
  return out;
}

}  // namespace

ProtocolResult run_protocol(const MediatorModel& model,
                            const ExperimentParams& params,
                            std::uint64_t seed) {
  validate(params);
  return std::visit(
      [&](const auto& m) -> ProtocolResult {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GateModel>) {
          return run_gate_model(m, params);
        } else if constexpr (std::is_same_v<T, LqgField>) {
          return run_lqg(m, params);
        } else if constexpr (std::is_same_v<T, MeanField>) {
          return run_mean_field(params);
        } else if constexpr (std::is_same_v<T, MeasuredChannel>) {
          return measured_channel_evolution(params, m);
        } else if constexpr (std::is_same_v<T, Collapse>) {
          const double rate =
              m.rate ? *m.rate
                     : 1.0 / penrose_collapse_time(params.m, params.d1,
                                                   params.constants);
          return collapse_channel_evolution(params, rate, m.steps);
        } else if constexpr (std::is_same_v<T, ClassicalDephasing>) {
          PhaseNoiseSpec noise;
          if (m.noise) {
            noise = *m.noise;
          } else {
            const auto chi = mean_field_local_phases(params);
            noise.means = chi;
            noise.sigmas = {0.5, 0.5};
          }
          return classical_dephasing_evolution(params, noise, seed);
        } else {
          static_assert(std::is_same_v<T, HybridEnsemble>);
          const HallReginattoResult hybrid =
              hall_reginatto_protocol(m.g1, m.g2, m.t);
          ProtocolResult out;
          // The bilinear hybrid coupling never entangles the probes (the
          // partially transposed covariance stays physical for every product
          // Gaussian input), so the qubit-level stand-in is a clean product.
          out.final_two_mass_state = to_density(product_phase_ket(0.0, 0.0));
          out.hybrid_log_negativity = hybrid.logneg_qqprime;
          return out;
        }
      },
      model);
}

}  // namespace gie
