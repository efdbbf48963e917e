#include "gie/cvhybrid.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>

namespace gie {

namespace {

void require_square(const Eigen::MatrixXd& m, int dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw ConfigError(std::string(what) + ": expected a " +
                      std::to_string(dim) + "x" + std::to_string(dim) +
                      " matrix");
  }
}

}  // namespace

GaussianState vacuum_state(int num_modes) {
  if (num_modes < 1) {
    throw ConfigError("vacuum_state: num_modes must be >= 1");
  }
  GaussianState s;
  s.num_modes = num_modes;
  s.mean = Eigen::VectorXd::Zero(2 * num_modes);
  s.covariance =
      0.5 * Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes);
  return s;
}

Eigen::MatrixXd symplectic_form(int num_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * num_modes, 2 * num_modes);
  for (int k = 0; k < num_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

void assert_valid(const GaussianState& state, double tolerance) {
  const int n = state.num_modes;
  if (n < 1) throw ConfigError("gaussian state: num_modes must be >= 1");
  if (state.mean.size() != 2 * n) {
    throw ConfigError("gaussian state: mean must have 2*num_modes entries");
  }
  require_square(state.covariance, 2 * n, "gaussian state covariance");
  if (!state.mean.allFinite() || !state.covariance.allFinite()) {
    throw NumericalError("gaussian state: non-finite entries");
  }
  const double asym =
      (state.covariance - state.covariance.transpose()).cwiseAbs().maxCoeff();
  if (asym > tolerance) {
    throw NumericalError("gaussian state: covariance asymmetry " +
                         std::to_string(asym) + " exceeds tolerance");
  }
  // Uncertainty principle: sigma + i Omega / 2 must be positive semidefinite.
  Eigen::MatrixXcd test =
      state.covariance.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) *
          symplectic_form(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(test);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("gaussian state: eigen decomposition failed");
  }
  if (eig.eigenvalues().minCoeff() < -tolerance) {
    throw NumericalError(
        "gaussian state: uncertainty condition violated (min eigenvalue " +
        std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
}

GaussianState symplectic_evolve(const GaussianState& state,
                                const QuadraticHamiltonian& h, double t) {
  assert_valid(state);
  const int dim = 2 * state.num_modes;
  require_square(h.M, dim, "quadratic hamiltonian M");
  if (!h.M.allFinite()) {
    throw ConfigError("quadratic hamiltonian: M has non-finite entries");
  }
  if ((h.M - h.M.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ConfigError("quadratic hamiltonian: M must be symmetric");
  }
  Eigen::VectorXd linear = h.linear;
  if (linear.size() == 0) linear = Eigen::VectorXd::Zero(dim);
  if (linear.size() != dim) {
    throw ConfigError("quadratic hamiltonian: linear must have 2*num_modes "
                      "entries (or be empty)");
  }

  const Eigen::MatrixXd omega = symplectic_form(state.num_modes);
  const Eigen::MatrixXd a = omega * h.M;

  // Affine flow dr/dt = A r + Omega linear, handled with one augmented
  // exponential so the drift and the rotation stay mutually consistent.
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
  aug.topLeftCorner(dim, dim) = a * t;
  aug.topRightCorner(dim, 1) = (omega * linear) * t;
  const Eigen::MatrixXd aug_exp = aug.exp();
  if (!aug_exp.allFinite()) {
    throw NumericalError(
        "symplectic_evolve: matrix exponential produced non-finite entries "
        "(ill-conditioned M*t)");
  }

  const Eigen::MatrixXd s = aug_exp.topLeftCorner(dim, dim);
  GaussianState out;
  out.num_modes = state.num_modes;
  out.mean = s * state.mean + aug_exp.topRightCorner(dim, 1);
  out.covariance = s * state.covariance * s.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose().eval());
  assert_valid(out);
  return out;
}

GaussianState reduce(const GaussianState& state,
                     const std::vector<int>& keep_modes) {
  assert_valid(state);
  if (keep_modes.empty()) {
    throw ConfigError("reduce: keep_modes must not be empty");
  }
  for (int k : keep_modes) {
    if (k < 0 || k >= state.num_modes) {
      throw ConfigError("reduce: mode index out of range");
    }
  }
  const int n = static_cast<int>(keep_modes.size());
  GaussianState out;
  out.num_modes = n;
  out.mean = Eigen::VectorXd::Zero(2 * n);
  out.covariance = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int qp = 0; qp < 2; ++qp) {
      out.mean(2 * i + qp) = state.mean(2 * keep_modes[i] + qp);
    }
    for (int j = 0; j < n; ++j) {
      out.covariance.block<2, 2>(2 * i, 2 * j) =
          state.covariance.block<2, 2>(2 * keep_modes[i], 2 * keep_modes[j]);
    }
  }
  return out;
}

double log_negativity(const GaussianState& state, int mode_a) {
  assert_valid(state);
  if (mode_a < 0 || mode_a >= state.num_modes) {
    throw ConfigError("log_negativity: mode_a out of range");
  }
  const int dim = 2 * state.num_modes;
  // Partial transpose = momentum sign flip on the transposed side. Flipping
  // side A's momentum gives the same spectrum as flipping side B's.
  Eigen::VectorXd flip = Eigen::VectorXd::Ones(dim);
  flip(2 * mode_a + 1) = -1.0;
  const Eigen::MatrixXd sigma_pt =
      flip.asDiagonal() * state.covariance * flip.asDiagonal();

  // Symplectic eigenvalues: moduli of the eigenvalues of i Omega sigma,
  // which come in +/- pairs.
  const Eigen::MatrixXd omega = symplectic_form(state.num_modes);
  Eigen::EigenSolver<Eigen::MatrixXd> eig(omega * sigma_pt);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("log_negativity: eigen decomposition failed");
  }
  double result = 0.0;
  // Each symplectic eigenvalue appears twice (as +i nu and -i nu); halve the
  // accumulated sum to count each mode once.
  double accum = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double nu = std::abs(eig.eigenvalues()(i));
    if (nu < 0.5 - 1e-15) {
      accum += -std::log(2.0 * nu);
    }
  }
  result = 0.5 * accum;
  return std::max(0.0, result);
}

HallReginattoResult hall_reginatto_protocol(
    double g1, double g2, double t,
    const std::optional<GaussianState>& initial) {
  GaussianState start = initial ? *initial : vacuum_state(3);
  if (start.num_modes != 3) {
    throw ConfigError(
        "hall_reginatto_protocol: initial state must have 3 modes (Q, C, Q')");
  }
  if (!std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(t)) {
    throw ConfigError("hall_reginatto_protocol: g1, g2, t must be finite");
  }

  // Quadrature indices with ordering (q_Q, p_Q, q_C, p_C, q_Q', p_Q').
  QuadraticHamiltonian h;
  h.M = Eigen::MatrixXd::Zero(6, 6);
  h.M(1, 2) = h.M(2, 1) = g1;  // g1 * p_Q * q_C
  h.M(4, 3) = h.M(3, 4) = g2;  // g2 * q_Q' * p_C
  h.linear = Eigen::VectorXd::Zero(6);

  HallReginattoResult out;
  out.state = symplectic_evolve(start, h, t);
  const GaussianState probes = reduce(out.state, {0, 2});
  out.logneg_qqprime = log_negativity(probes, 0);
  return out;
}

TrappedOscillatorResult trapped_oscillator_protocol(
    double m, double omega, double d, double t,
    const PhysicalConstants& constants) {
  if (!(m > 0.0)) throw ConfigError("trapped_oscillator: m must be > 0");
  if (!(omega > 0.0)) {
    throw ConfigError("trapped_oscillator: omega must be > 0");
  }
  if (!(d > 0.0)) throw ConfigError("trapped_oscillator: d must be > 0");
  if (!(t >= 0.0)) throw ConfigError("trapped_oscillator: t must be >= 0");

  TrappedOscillatorResult out;
  out.coupling_lambda = 2.0 * constants.G * m * m / (d * d * d);
  // In trap units (q = x sqrt(m omega / hbar), tau = omega t) the bilinear
  // coupling strength is lambda / (m omega^2).
  const double gc = out.coupling_lambda / (m * omega * omega);
  out.dimensionless_coupling = gc;
  if (gc >= 0.5) {
    throw ConfigError(
        "trapped_oscillator: quadratic expansion invalid (2*G*m/(d^3 omega^2) "
        "= " +
        std::to_string(gc) + " >= 0.5; the soft normal mode destabilizes)");
  }

  // H / (hbar omega) = sum_i [ (q_i^2 + p_i^2)/2 ] - (gc/2)(q_1^2 + q_2^2)
  //                    + gc q_1 q_2 + b (q_2 - q_1),
  // from the second-order expansion of -G m^2 / |d + x_2 - x_1|.
  QuadraticHamiltonian h;
  h.M = Eigen::MatrixXd::Identity(4, 4);
  h.M(0, 0) = 1.0 - gc;
  h.M(2, 2) = 1.0 - gc;
  h.M(0, 2) = h.M(2, 0) = gc;
  const double b = (constants.G * m * m / (d * d)) /
                   std::sqrt(constants.hbar() * m * omega * omega * omega);
  h.linear = Eigen::VectorXd::Zero(4);
  h.linear(0) = -b;
  h.linear(2) = b;

  out.state = symplectic_evolve(vacuum_state(2), h, omega * t);
  out.logneg = log_negativity(out.state, 0);
  return out;
}

}  // namespace gie
