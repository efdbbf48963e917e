#include "gie/qstate.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gie {

namespace {

int product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

void check_dims(const std::vector<int>& dims, int total, const char* who) {
  if (dims.empty()) throw std::invalid_argument(std::string(who) + ": empty dims");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument(std::string(who) + ": nonpositive dim");
  if (product(dims) != total)
    throw std::invalid_argument(std::string(who) + ": dims do not match vector size");
}

// Strides for the row-major tensor layout: stride[k] = product of dims after k.
std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> s(dims.size());
  int acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

double log_base(double x, bool bits) { return bits ? std::log2(x) : std::log(x); }

}  // namespace

// ---- construction ----

Ket basis_ket(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim)
    throw std::invalid_argument("basis_ket: index out of range");
  Ket k{Vec::Zero(dim), {dim}};
  k.amp[index] = 1.0;
  return k;
}

Ket ket_from(std::initializer_list<Complex> amps, std::vector<int> dims) {
  Vec v(static_cast<int>(amps.size()));
  int i = 0;
  for (Complex c : amps) v[i++] = c;
  return ket_from(v, std::move(dims));
}

Ket ket_from(const Vec& amps, std::vector<int> dims) {
  check_dims(dims, static_cast<int>(amps.size()), "ket_from");
  return Ket{amps, std::move(dims)};
}

DensityMatrix to_density(const Ket& psi) {
  return DensityMatrix{psi.amp * psi.amp.adjoint(), psi.dims};
}

DensityMatrix density_from(const Mat& rho, std::vector<int> dims) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density_from: matrix not square");
  check_dims(dims, static_cast<int>(rho.rows()), "density_from");
  return DensityMatrix{rho, std::move(dims)};
}

Ket coherent_state(Complex alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("coherent_state: negative cutoff");
  Vec v(cutoff + 1);
  // c_n = exp(−|α|²/2) α^n / √n!, built by the stable recurrence c_n = c_{n−1} α/√n.
  Complex c = std::exp(-0.5 * std::norm(alpha));
  v[0] = c;
  for (int n = 1; n <= cutoff; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    v[n] = c;
  }
  return Ket{v, {cutoff + 1}};
}

// ---- elementary operators ----

Mat identity(int dim) { return Mat::Identity(dim, dim); }

Mat annihilation(int cutoff) {
  Mat a = Mat::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Mat number_operator(int cutoff) {
  Mat n = Mat::Zero(cutoff + 1, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Mat displacement_operator(Complex beta, int cutoff) {
  Mat a = annihilation(cutoff);
  Mat gen = beta * a.adjoint() - std::conj(beta) * a;
  return gen.exp();
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat hadamard() {
  Mat m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

// ---- composition and application ----

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  Vec v(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a.amp[i] * b.amp[j];
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return Ket{std::move(v), std::move(dims)};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return DensityMatrix{kron(a.rho, b.rho), std::move(dims)};
}

Ket apply(const Mat& op, const Ket& psi) {
  if (op.cols() != psi.dim()) throw std::invalid_argument("apply: dimension mismatch");
  return Ket{op * psi.amp, psi.dims};
}

DensityMatrix apply(const Mat& op, const DensityMatrix& r) {
  if (op.cols() != r.dim()) throw std::invalid_argument("apply: dimension mismatch");
  return DensityMatrix{op * r.rho * op.adjoint(), r.dims};
}

Ket apply_to_subsystem(const Mat& op, int k, const Ket& psi) {
  const int n = static_cast<int>(psi.dims.size());
  if (k < 0 || k >= n) throw std::invalid_argument("apply_to_subsystem: bad index");
  const int dk = psi.dims[k];
  if (op.rows() != dk || op.cols() != dk)
    throw std::invalid_argument("apply_to_subsystem: operator dim mismatch");
  int left = 1, right = 1;
  for (int i = 0; i < k; ++i) left *= psi.dims[i];
  for (int i = k + 1; i < n; ++i) right *= psi.dims[i];

  Vec out(psi.dim());
  Vec col(dk);
  for (int l = 0; l < left; ++l) {
    const int base = l * dk * right;
    for (int r = 0; r < right; ++r) {
      for (int i = 0; i < dk; ++i) col[i] = psi.amp[base + i * right + r];
      Vec res = op * col;
      for (int i = 0; i < dk; ++i) out[base + i * right + r] = res[i];
    }
  }
  return Ket{std::move(out), psi.dims};
}

DensityMatrix apply_to_subsystem(const Mat& op, int k, const DensityMatrix& r) {
  const int n = static_cast<int>(r.dims.size());
  if (k < 0 || k >= n) throw std::invalid_argument("apply_to_subsystem: bad index");
  Mat full = Mat::Ones(1, 1);
  for (int i = 0; i < n; ++i)
    full = kron(full, i == k ? op : Mat(identity(r.dims[i])));
  return gie::apply(full, r);
}

Ket apply_to_pair(const Mat& op, int k, const Ket& psi) {
  const int n = static_cast<int>(psi.dims.size());
  if (k < 0 || k + 1 >= n) throw std::invalid_argument("apply_to_pair: bad index");
  const int dk = psi.dims[k] * psi.dims[k + 1];
  if (op.rows() != dk || op.cols() != dk)
    throw std::invalid_argument("apply_to_pair: operator dim mismatch");
  // Treat (k, k+1) as one subsystem of the merged dimension.
  std::vector<int> merged;
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      merged.push_back(dk);
    } else if (i != k + 1) {
      merged.push_back(psi.dims[i]);
    }
  }
  Ket tmp{psi.amp, merged};
  Ket res = apply_to_subsystem(op, k, tmp);
  return Ket{std::move(res.amp), psi.dims};
}

Ket permute_subsystems(const Ket& psi, const std::vector<int>& order) {
  const int n = static_cast<int>(psi.dims.size());
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("permute_subsystems: order size mismatch");
  std::vector<int> seen(n, 0);
  for (int o : order) {
    if (o < 0 || o >= n || seen[o]++)
      throw std::invalid_argument("permute_subsystems: invalid permutation");
  }
  std::vector<int> new_dims(n);
  for (int j = 0; j < n; ++j) new_dims[j] = psi.dims[order[j]];
  const auto old_strides = strides_of(psi.dims);
  const auto new_strides = strides_of(new_dims);

  Vec out(psi.dim());
  std::vector<int> idx(n, 0);  // multi-index in the NEW ordering
  for (int flat = 0; flat < psi.dim(); ++flat) {
    int rem = flat, old_flat = 0;
    for (int j = 0; j < n; ++j) {
      const int ij = rem / new_strides[j];
      rem %= new_strides[j];
      old_flat += ij * old_strides[order[j]];
    }
    out[flat] = psi.amp[old_flat];
  }
  return Ket{std::move(out), std::move(new_dims)};
}

// ---- reductions ----

DensityMatrix partial_trace(const DensityMatrix& r, const std::vector<int>& keep) {
  const int n = static_cast<int>(r.dims.size());
  std::vector<int> is_kept(n, 0);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: bad keep index");
    is_kept[k] = 1;
  }
  std::vector<int> kept, traced;
  for (int i = 0; i < n; ++i) (is_kept[i] ? kept : traced).push_back(i);
  if (kept.empty()) throw std::invalid_argument("partial_trace: nothing kept");

  const auto strides = strides_of(r.dims);
  int dim_keep = 1, dim_tr = 1;
  std::vector<int> keep_dims;
  for (int k : kept) {
    dim_keep *= r.dims[k];
    keep_dims.push_back(r.dims[k]);
  }
  for (int t : traced) dim_tr *= r.dims[t];

  // Enumerate kept and traced multi-indices by their flat order.
  auto offset_of = [&](const std::vector<int>& subs, int flat) {
    int off = 0;
    for (int j = static_cast<int>(subs.size()) - 1; j >= 0; --j) {
      const int d = r.dims[subs[j]];
      off += (flat % d) * strides[subs[j]];
      flat /= d;
    }
    return off;
  };

  Mat out = Mat::Zero(dim_keep, dim_keep);
  for (int a = 0; a < dim_keep; ++a) {
    const int oa = offset_of(kept, a);
    for (int b = 0; b < dim_keep; ++b) {
      const int ob = offset_of(kept, b);
      Complex s = 0.0;
      for (int t = 0; t < dim_tr; ++t) {
        const int ot = offset_of(traced, t);
        s += r.rho(oa + ot, ob + ot);
      }
      out(a, b) = s;
    }
  }
  return DensityMatrix{std::move(out), std::move(keep_dims)};
}

DensityMatrix partial_trace(const Ket& psi, const std::vector<int>& keep) {
  const int n = static_cast<int>(psi.dims.size());
  std::vector<int> is_kept(n, 0);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: bad keep index");
    is_kept[k] = 1;
  }
  // Permute kept subsystems to the front, then Gram-reduce the amplitude matrix.
  std::vector<int> order;
  for (int k : keep) order.push_back(k);
  for (int i = 0; i < n; ++i)
    if (!is_kept[i]) order.push_back(i);
  Ket p = permute_subsystems(psi, order);

  int dim_keep = 1;
  std::vector<int> keep_dims;
  for (size_t j = 0; j < keep.size(); ++j) {
    keep_dims.push_back(p.dims[j]);
    dim_keep *= p.dims[j];
  }
  const int dim_tr = p.dim() / dim_keep;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      M(p.amp.data(), dim_keep, dim_tr);
  Mat rho = M * M.adjoint();
  return DensityMatrix{std::move(rho), std::move(keep_dims)};
}

// ---- entanglement and distance measures ----

namespace {
// Split dims at the bipartition point; returns (dimA, dimB).
std::pair<int, int> bipartition(const std::vector<int>& dims, int in_a, const char* who) {
  if (in_a < 1 || in_a >= static_cast<int>(dims.size()))
    throw std::invalid_argument(std::string(who) + ": bipartition out of range");
  int da = 1, db = 1;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    (i < in_a ? da : db) *= dims[i];
  return {da, db};
}
}  // namespace

DensityMatrix partial_transpose(const DensityMatrix& r, int subsystems_in_a) {
  auto [da, db] = bipartition(r.dims, subsystems_in_a, "partial_transpose");
  Mat out(r.dim(), r.dim());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int ap = 0; ap < da; ++ap)
        for (int bp = 0; bp < db; ++bp)
          out(a * db + b, ap * db + bp) = r.rho(a * db + bp, ap * db + b);
  return DensityMatrix{std::move(out), r.dims};
}

double negativity(const DensityMatrix& r, int subsystems_in_a) {
  DensityMatrix pt = partial_transpose(r, subsystems_in_a);
  // ρ^{T_B} is Hermitian when ρ is; symmetrize to shed numerical skew.
  Mat h = 0.5 * (pt.rho + pt.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  double neg = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] < 0.0) neg -= es.eigenvalues()[i];
  return neg;
}

bool ppt_separable(const DensityMatrix& r, int subsystems_in_a, double tolerance) {
  return negativity(r, subsystems_in_a) <= tolerance;
}

std::vector<double> schmidt_coefficients(const Ket& psi, int subsystems_in_a) {
  auto [da, db] = bipartition(psi.dims, subsystems_in_a, "schmidt_coefficients");
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      M(psi.amp.data(), da, db);
  Eigen::JacobiSVD<Mat> svd(M);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
  return out;
}

double entanglement_entropy(const Ket& psi, int subsystems_in_a, bool bits) {
  auto sv = schmidt_coefficients(psi, subsystems_in_a);
  double s = 0.0;
  for (double v : sv) {
    const double p = v * v;
    if (p > 1e-300) s -= p * log_base(p, bits);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& r, bool bits) {
  Mat h = 0.5 * (r.rho + r.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > 1e-300) s -= p * log_base(p, bits);
  }
  return s;
}

double linear_entropy(const DensityMatrix& r) { return 1.0 - purity(r); }

double purity(const DensityMatrix& r) {
  return (r.rho * r.rho).trace().real();
}

double fidelity(const Ket& a, const Ket& b) { return std::norm(overlap(a, b)); }

double fidelity(const Ket& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  return (a.amp.adjoint() * b.rho * a.amp)(0, 0).real();
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  // Uhlmann fidelity via the eigen-square-root of a.
  Mat ha = 0.5 * (a.rho + a.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(ha);
  Vec sq = es.eigenvalues().cast<Complex>();
  for (int i = 0; i < sq.size(); ++i)
    sq[i] = std::sqrt(std::max(0.0, sq[i].real()));
  Mat root = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
  Mat inner = root * b.rho * root;
  Eigen::SelfAdjointEigenSolver<Mat> es2(0.5 * (inner + inner.adjoint()));
  double f = 0.0;
  for (int i = 0; i < es2.eigenvalues().size(); ++i)
    f += std::sqrt(std::max(0.0, es2.eigenvalues()[i]));
  return f * f;
}

Complex overlap(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  return (a.amp.adjoint() * b.amp)(0, 0);
}

// ---- validity and truncation certification ----

void assert_valid(const Ket& psi, double tolerance) {
  check_dims(psi.dims, psi.dim(), "assert_valid(ket)");
  const double n = psi.amp.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > tolerance) {
    std::ostringstream os;
    os << "state norm " << n << " deviates from 1 beyond " << tolerance;
    throw NumericalError(os.str());
  }
}

void assert_valid(const DensityMatrix& r, double tolerance) {
  check_dims(r.dims, r.dim(), "assert_valid(density)");
  const double tr = r.rho.trace().real();
  if (!std::isfinite(tr) || std::abs(tr - 1.0) > tolerance)
    throw NumericalError("density trace deviates from 1");
  const double herm = (r.rho - r.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance) throw NumericalError("density not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (r.rho + r.rho.adjoint()),
                                        Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -100.0 * tolerance)
    throw NumericalError("density has a negative eigenvalue");
}

double top_level_mass(const Ket& psi, int k) {
  const int n = static_cast<int>(psi.dims.size());
  if (k < 0 || k >= n) throw std::invalid_argument("top_level_mass: bad index");
  const auto strides = strides_of(psi.dims);
  const int dk = psi.dims[k];
  double mass = 0.0;
  for (int i = 0; i < psi.dim(); ++i) {
    if ((i / strides[k]) % dk == dk - 1) mass += std::norm(psi.amp[i]);
  }
  return mass;
}

double top_level_mass(const DensityMatrix& r, int k) {
  const int n = static_cast<int>(r.dims.size());
  if (k < 0 || k >= n) throw std::invalid_argument("top_level_mass: bad index");
  const auto strides = strides_of(r.dims);
  const int dk = r.dims[k];
  double mass = 0.0;
  for (int i = 0; i < r.dim(); ++i) {
    if ((i / strides[k]) % dk == dk - 1) mass += r.rho(i, i).real();
  }
  return mass;
}

namespace {
template <typename State>
void certify_impl(const State& s, const std::vector<int>& fock, double budget) {
  for (int k : fock) {
    const double m = top_level_mass(s, k);
    if (m > budget) {
      std::ostringstream os;
      os << "truncation leakage on subsystem " << k << ": top-level mass " << m
         << " exceeds budget " << budget;
      throw TruncationError(os.str());
    }
  }
}
}  // namespace

void certify_truncation(const Ket& psi, const std::vector<int>& fock_subsystems,
                        double budget) {
  certify_impl(psi, fock_subsystems, budget);
}

void certify_truncation(const DensityMatrix& r, const std::vector<int>& fock_subsystems,
                        double budget) {
  certify_impl(r, fock_subsystems, budget);
}

}  // namespace gie
