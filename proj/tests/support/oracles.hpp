// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written from first principles with
// different algorithms than the production code (explicit index arithmetic,
// brute-force eigensolves, split-step integrators), so agreement is
// evidence, not tautology.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Brute-force partial transpose negativity.
// dims: subsystem dimensions; in_a: mask, true = transpose this subsystem.
// ---------------------------------------------------------------------------
inline double negativity_bruteforce(const Mat& rho,
                                    const std::vector<int>& dims,
                                    const std::vector<bool>& in_a) {
  const int n = static_cast<int>(dims.size());
  int total = 1;
  for (int d : dims) total *= d;

  auto decompose = [&](int flat) {
    std::vector<int> idx(n);
    for (int k = n - 1; k >= 0; --k) {
      idx[k] = flat % dims[k];
      flat /= dims[k];
    }
    return idx;
  };
  auto compose = [&](const std::vector<int>& idx) {
    int flat = 0;
    for (int k = 0; k < n; ++k) flat = flat * dims[k] + idx[k];
    return flat;
  };

  Mat pt(total, total);
  for (int r = 0; r < total; ++r) {
    for (int c = 0; c < total; ++c) {
      std::vector<int> ri = decompose(r), ci = decompose(c);
      for (int k = 0; k < n; ++k) {
        if (in_a[k]) std::swap(ri[k], ci[k]);
      }
      pt(compose(ri), compose(ci)) = rho(r, c);
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(pt);
  double neg = 0.0;
  for (int i = 0; i < total; ++i) {
    const double ev = es.eigenvalues()[i];
    if (ev < 0.0) neg -= ev;
  }
  return neg;
}

// ---------------------------------------------------------------------------
// Double-interferometer circuit simulation. Each mass is a path qubit that
// starts in |0>, passes a 50/50 splitter, picks up branch-dependent phases,
// and passes a recombining splitter. Detector probabilities come from the
// Born rule on the final state. phase[i][j] is the phase of branch (i, j).
// ---------------------------------------------------------------------------
struct CircuitResult {
  double p_first_mass_port0;
  Eigen::Matrix2d joint;  // joint port distribution after both recombiners
  Vec branch_state;       // 4-vector after the phase zone (before recombining)
};

inline CircuitResult circuit_double_interferometer(
    const Eigen::Matrix2d& phase) {
  // Symmetric 50/50 beam splitter.
  Mat bs(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  bs << s, s, s, -s;

  Vec psi = Vec::Zero(4);
  psi(0) = 1.0;  // |0>|0>

  // Split both masses.
  Mat bs2 = Mat::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          bs2(a * 2 + b, c * 2 + d) = bs(a, c) * bs(b, d);
  psi = bs2 * psi;

  // Branch phases.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      psi(i * 2 + j) *= std::exp(Cx(0.0, phase(i, j)));

  CircuitResult out;
  out.branch_state = psi;

  // Recombine and measure.
  Vec fin = bs2 * psi;
  out.joint.setZero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.joint(i, j) = std::norm(fin(i * 2 + j));
  out.p_first_mass_port0 = out.joint(0, 0) + out.joint(0, 1);
  return out;
}

// Convenience: phases (0, phi1, phi1, phi1 + dphi) as in the two-mass
// gravitational layout.
inline CircuitResult circuit_from_phi(double phi1, double dphi) {
  Eigen::Matrix2d ph;
  ph << 0.0, phi1, phi1, phi1 + dphi;
  return circuit_double_interferometer(ph);
}

// Closed forms for the branch state (|00>+e^{i phi1}|01>+e^{i phi1}|10>
// +e^{i(phi1+dphi)}|11>)/2.
inline double branch_negativity_closed(double phi1, double dphi) {
  return 0.5 * std::abs(std::sin(0.5 * (dphi - phi1)));
}
inline double witness_closed(double phi1, double dphi) {
  return std::cos(phi1) - std::cos(dphi);
}
inline double p0_closed(double phi1, double dphi) {
  const double c1 = std::cos(0.5 * phi1), c2 = std::cos(0.5 * dphi);
  return 0.5 * (c1 * c1 + c2 * c2);
}

// ---------------------------------------------------------------------------
// Split-step (Strang) Trotter integration of
//   H = omega n + (lambda a + conj(lambda) a^dagger)
// on a truncated Fock space, with Richardson extrapolation in the step
// count. Matrix exponentials of the small pieces are done by scaling and
// squaring on the dense matrix (Eigen has no expm here on purpose; we use
// an eigendecomposition of the Hermitian generator instead).
// ---------------------------------------------------------------------------
inline Mat expi_hermitian(const Mat& h, double scale) {
  // exp(-i * scale * h) for Hermitian h.
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(h.rows());
  for (int i = 0; i < h.rows(); ++i)
    phases(i) = std::exp(Cx(0.0, -scale * es.eigenvalues()[i]));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

inline Mat fock_number(int dim) {
  Mat n = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) n(i, i) = i;
  return n;
}

inline Mat fock_lower(int dim) {
  Mat a = Mat::Zero(dim, dim);
  for (int i = 1; i < dim; ++i) a(i - 1, i) = std::sqrt(double(i));
  return a;
}

inline Vec trotter_driven_mode(const Vec& initial, double omega, Cx lambda,
                               double t, int steps) {
  const int dim = static_cast<int>(initial.size());
  const Mat n = fock_number(dim);
  const Mat a = fock_lower(dim);
  const Mat drive = lambda * a + std::conj(lambda) * a.adjoint();
  const double dt = t / steps;
  const Mat half_n = expi_hermitian(n, 0.5 * omega * dt);
  const Mat full_d = expi_hermitian(drive, dt);
  Vec psi = initial;
  for (int s = 0; s < steps; ++s) psi = half_n * (full_d * (half_n * psi));
  return psi;
}

// Richardson-extrapolated endpoint: Strang splitting has O(dt^2) error, so
// (4 psi_{2n} - psi_n) / 3 cancels the leading term.
inline Vec trotter_extrapolated(const Vec& initial, double omega, Cx lambda,
                                double t, int steps) {
  const Vec coarse = trotter_driven_mode(initial, omega, lambda, t, steps);
  const Vec fine = trotter_driven_mode(initial, omega, lambda, t, 2 * steps);
  Vec out = (4.0 * fine - coarse) / 3.0;
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Composite 16-point Gauss-Legendre quadrature (independent of the adaptive
// Simpson integrator in the library).
// ---------------------------------------------------------------------------
inline double gauss_legendre(const std::function<double(double)>& f, double a,
                             double b, int panels = 64) {
  static const double xs[8] = {0.0950125098376374, 0.2816035507792589,
                               0.4580167776572274, 0.6178762444026438,
                               0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double ws[8] = {0.1894506104550685, 0.1826034150449236,
                               0.1691565193950025, 0.1495959888165767,
                               0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    const double half = 0.5 * h;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      acc += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
    }
    total += acc * half;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Fock-space check of coherent-branch decoherence: one qubit branches into
// coupling/no-coupling, each field mode k picks up displacement delta_k on
// the coupled branch. The off-diagonal qubit coherence after tracing the
// field is prod_k <0|delta_k> = exp(-sum |delta_k|^2 / 2) (x phase). The
// oracle evaluates the overlap through truncated Fock amplitudes instead of
// the closed form.
// ---------------------------------------------------------------------------
inline double fock_coherence_after_trace(const std::vector<Cx>& deltas,
                                         int cutoff = 40) {
  Cx overlap = 1.0;
  for (const Cx& d : deltas) {
    // <0|coherent(d)> over truncated Fock amplitudes: the n = 0 amplitude
    // of the normalized coherent state.
    double norm2 = 0.0;
    double term = 1.0;  // |d|^{2n} / n!
    const double x = std::norm(d);
    for (int n = 0; n < cutoff; ++n) {
      norm2 += term;
      term *= x / (n + 1);
    }
    overlap *= 1.0 / std::sqrt(norm2);  // e^{-|d|^2/2} via truncated series
  }
  return std::abs(overlap);
}

// ---------------------------------------------------------------------------
// Two-mode Gaussian states: reference log-negativity from the standard-form
// symplectic eigenvalue of the partial transpose, computed through the
// smallest eigenvalue of |i Omega sigma_PT| with a generic (non-symplectic)
// eigensolver.
// ---------------------------------------------------------------------------
inline double logneg_two_mode(const Eigen::MatrixXd& sigma) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(4, 4);
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  omega(2, 3) = 1;
  omega(3, 2) = -1;
  Eigen::MatrixXd pt = Eigen::MatrixXd::Identity(4, 4);
  pt(3, 3) = -1;  // flip p of the second mode
  const Eigen::MatrixXd spt = pt * sigma * pt;
  Eigen::ComplexEigenSolver<Mat> es(
      Cx(0, 1) * omega.cast<Cx>() * spt.cast<Cx>());
  double nu_min = 1e300;
  for (int i = 0; i < 4; ++i) {
    const double m = std::abs(es.eigenvalues()[i]);
    if (m > 1e-12 && m < nu_min) nu_min = m;
  }
  return std::max(0.0, -std::log(2.0 * nu_min));
}

// Uniform random kets for fuzzing.
inline Vec random_ket(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Cx(g(rng), g(rng));
  v.normalize();
  return v;
}

}  // namespace oracle
