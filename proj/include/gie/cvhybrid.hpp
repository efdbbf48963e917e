#pragma once
#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gie/constants.hpp"
#include "gie/errors.hpp"

namespace gie {

// Gaussian state over N bosonic modes in natural units (hbar = 1), quadrature
// ordering (q1, p1, q2, p2, ...). Vacuum covariance is I/2.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  int num_modes = 0;
};

// H = 1/2 r^T M r + linear^T r over the same quadrature ordering.
struct QuadraticHamiltonian {
  Eigen::MatrixXd M;
  Eigen::VectorXd linear;
};

GaussianState vacuum_state(int num_modes);

// Symplectic form: block-diagonal [[0, 1], [-1, 0]] per mode.
Eigen::MatrixXd symplectic_form(int num_modes);

// Checks symmetry and the uncertainty condition covariance + i*Omega/2 >= 0.
void assert_valid(const GaussianState& state, double tolerance = 1e-10);

// Hamiltonian flow for time t: mean follows the affine drift, covariance maps
// as S sigma S^T with S = exp(Omega M t).
GaussianState symplectic_evolve(const GaussianState& state,
                                const QuadraticHamiltonian& h, double t);

// Gaussian partial trace: restrict mean and covariance to the kept modes.
GaussianState reduce(const GaussianState& state,
                     const std::vector<int>& keep_modes);

// Logarithmic negativity E_N = max(0, -ln(2 nu_minus)) across a one-mode-vs-
// rest cut, nu_minus being the smallest symplectic eigenvalue of the partially
// transposed covariance.
double log_negativity(const GaussianState& state, int mode_a);

struct HallReginattoResult {
  GaussianState state;          // full 3-mode state, order (Q, C, Q')
  double logneg_qqprime = 0.0;  // across the Q | Q' cut with C traced out
};

// Two probe modes Q, Q' coupled to a shared classical-sector mode C through
// H = g1 * p_Q * q_C + g2 * q_Q' * p_C, all couplings on simultaneously.
HallReginattoResult hall_reginatto_protocol(
    double g1, double g2, double t,
    const std::optional<GaussianState>& initial = std::nullopt);

struct TrappedOscillatorResult {
  GaussianState state;  // two trap modes, dimensionless quadratures
  double logneg = 0.0;
  double coupling_lambda = 0.0;        // 2 G m^2 / d^3, SI
  double dimensionless_coupling = 0.0; // 2 G m / (d^3 omega^2)
};

// Two identical trapped masses a distance d apart, each in its trap ground
// state; the Newtonian potential is expanded to second order around the
// equilibrium separation (constant dropped, linear kept as a mean shift,
// bilinear term is the entangler).
TrappedOscillatorResult trapped_oscillator_protocol(
    double m, double omega, double d, double t,
    const PhysicalConstants& constants = PhysicalConstants{});

}  // namespace gie
