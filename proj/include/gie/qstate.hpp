#pragma once
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "gie/errors.hpp"

namespace gie {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Shared numerical policy. Three tiers: state validity (norm/trace/hermiticity),
// entanglement-is-zero decisions, and state-agreement (fidelity) checks.
namespace tol {
inline constexpr double state_validity = 1e-12;
inline constexpr double entanglement_zero = 1e-10;
inline constexpr double fidelity_match = 1e-6;
// Certified bound on the probability mass allowed in the top retained Fock level.
inline constexpr double truncation_leakage = 1e-10;
// Default Fock cutoff: levels 0..N inclusive, dimension N+1.
inline constexpr int default_fock_cutoff = 30;
}  // namespace tol

// Pure state over a tensor product of subsystems. dims[0] is the slowest index:
// the amplitude of |i0 i1 ... ik> sits at ((i0*d1 + i1)*d2 + i2)*...
struct Ket {
  Vec amp;
  std::vector<int> dims;
  int dim() const { return static_cast<int>(amp.size()); }
};

// Mixed state with the same subsystem bookkeeping and index convention.
struct DensityMatrix {
  Mat rho;
  std::vector<int> dims;
  int dim() const { return static_cast<int>(rho.rows()); }
};

// ---- construction ----
Ket basis_ket(int dim, int index);
Ket ket_from(std::initializer_list<Complex> amps, std::vector<int> dims);
Ket ket_from(const Vec& amps, std::vector<int> dims);
DensityMatrix to_density(const Ket& psi);
DensityMatrix density_from(const Mat& rho, std::vector<int> dims);

// Coherent state |alpha> on Fock levels 0..cutoff (closed-form amplitudes,
// not renormalized: missing tail mass is what truncation certification measures).
Ket coherent_state(Complex alpha, int cutoff);

// ---- elementary operators ----
Mat identity(int dim);
Mat annihilation(int cutoff);               // a, dimension cutoff+1
Mat number_operator(int cutoff);            // a†a
Mat displacement_operator(Complex beta, int cutoff);  // exp(beta a† − beta* a)
Mat pauli_x();
Mat pauli_z();
Mat hadamard();

// ---- composition and application ----
Mat kron(const Mat& a, const Mat& b);
Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
Ket apply(const Mat& op, const Ket& psi);                    // full-space operator
DensityMatrix apply(const Mat& op, const DensityMatrix& r);  // op ρ op†
// Apply an operator acting on subsystem k only (op dim must equal dims[k]).
Ket apply_to_subsystem(const Mat& op, int k, const Ket& psi);
DensityMatrix apply_to_subsystem(const Mat& op, int k, const DensityMatrix& r);
// Apply an operator on the adjacent pair (k, k+1); op dim = dims[k]*dims[k+1].
Ket apply_to_pair(const Mat& op, int k, const Ket& psi);
// Reorder subsystems: order[j] = index (in the old state) of the j-th new subsystem.
Ket permute_subsystems(const Ket& psi, const std::vector<int>& order);

// ---- reductions ----
DensityMatrix partial_trace(const DensityMatrix& r, const std::vector<int>& keep);
DensityMatrix partial_trace(const Ket& psi, const std::vector<int>& keep);

// ---- entanglement and distance measures ----
// Bipartition convention: the first `subsystems_in_a` subsystems form side A.
DensityMatrix partial_transpose(const DensityMatrix& r, int subsystems_in_a);
double negativity(const DensityMatrix& r, int subsystems_in_a);
bool ppt_separable(const DensityMatrix& r, int subsystems_in_a,
                   double tolerance = tol::entanglement_zero);
std::vector<double> schmidt_coefficients(const Ket& psi, int subsystems_in_a);
// Von Neumann entropy of the reduced state of side A; bits by default.
double entanglement_entropy(const Ket& psi, int subsystems_in_a, bool bits = true);
double von_neumann_entropy(const DensityMatrix& r, bool bits = true);
double linear_entropy(const DensityMatrix& r);  // 1 − tr(ρ²)
double purity(const DensityMatrix& r);

// Fidelity conventions: squared overlap |<ψ|φ>|² for pure states, <ψ|ρ|ψ> for
// pure-vs-mixed, and the Uhlmann fidelity (tr√(√ρσ√ρ))² for mixed-vs-mixed.
double fidelity(const Ket& a, const Ket& b);
double fidelity(const Ket& a, const DensityMatrix& b);
double fidelity(const DensityMatrix& a, const DensityMatrix& b);
Complex overlap(const Ket& a, const Ket& b);  // <a|b>

// ---- validity and truncation certification ----
void assert_valid(const Ket& psi, double tolerance = tol::state_validity);
void assert_valid(const DensityMatrix& r, double tolerance = tol::state_validity);
// Probability mass in the top retained level of subsystem k.
double top_level_mass(const Ket& psi, int k);
double top_level_mass(const DensityMatrix& r, int k);
// Throws TruncationError if any listed Fock subsystem parks more than `budget`
// probability in its top level.
void certify_truncation(const Ket& psi, const std::vector<int>& fock_subsystems,
                        double budget = tol::truncation_leakage);
void certify_truncation(const DensityMatrix& r, const std::vector<int>& fock_subsystems,
                        double budget = tol::truncation_leakage);

}  // namespace gie
