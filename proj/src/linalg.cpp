#include "trinet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace trinet {

namespace {

void check_dims(const Dims& dims, int side, const char* what) {
  if (dims.empty()) {
    throw InvariantError(std::string(what) + ": dims must list at least one subsystem");
  }
  for (int d : dims) {
    if (d <= 0) {
      throw InvariantError(std::string(what) + ": subsystem dimensions must be positive");
    }
  }
  const int n = total_dim(dims);
  if (n > kMaxTotalDim) {
    std::ostringstream os;
    os << what << ": total dimension " << n << " exceeds the supported maximum " << kMaxTotalDim;
    throw InvariantError(os.str());
  }
  if (n != side) {
    std::ostringstream os;
    os << what << ": product of dims (" << n << ") must equal the data size (" << side << ")";
    throw InvariantError(os.str());
  }
}

// map[new_flat] = old_flat for the reordering "new subsystem k = old perm[k]".
std::vector<int> permutation_index_map(const Dims& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length does not match the number of subsystems");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw std::invalid_argument("permutation is not a bijection on subsystem indices");
    }
    seen[p] = true;
  }
  std::vector<int> old_strides(n, 1);
  for (int k = n - 2; k >= 0; --k) old_strides[k] = old_strides[k + 1] * dims[k + 1];

  Dims new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];

  const int total = total_dim(dims);
  std::vector<int> map(total);
  std::vector<int> digit(n, 0);
  for (int flat = 0; flat < total; ++flat) {
    int old = 0;
    for (int k = 0; k < n; ++k) old += digit[k] * old_strides[perm[k]];
    map[flat] = old;
    for (int k = n - 1; k >= 0; --k) {
      if (++digit[k] < new_dims[k]) break;
      digit[k] = 0;
    }
  }
  return map;
}

std::vector<int> left_first_order(const Bipartition& cut, int parties) {
  std::vector<int> left = cut.left;
  std::sort(left.begin(), left.end());
  if (left.empty() || static_cast<int>(left.size()) >= parties) {
    throw std::invalid_argument("degenerate cut: both blocks must be non-empty");
  }
  if (std::adjacent_find(left.begin(), left.end()) != left.end() || left.front() < 0 ||
      left.back() >= parties) {
    throw std::invalid_argument("cut indices must be distinct subsystem indices");
  }
  std::vector<int> order = left;
  for (int k = 0; k < parties; ++k) {
    if (!std::binary_search(left.begin(), left.end(), k)) order.push_back(k);
  }
  return order;
}

int block_dim(const Dims& dims, const std::vector<int>& order, std::size_t begin, std::size_t end) {
  int n = 1;
  for (std::size_t i = begin; i < end; ++i) n *= dims[order[i]];
  return n;
}

}  // namespace

int total_dim(const Dims& dims) {
  long long n = 1;
  for (int d : dims) {
    n *= d;
    if (n > (1LL << 30)) break;
  }
  return static_cast<int>(std::min<long long>(n, 1LL << 30));
}

DensityState::DensityState(Matrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvariantError("DensityState: matrix must be square");
  }
  check_dims(dims_, static_cast<int>(matrix_.rows()), "DensityState");
  const double herm_err = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol) {
    std::ostringstream os;
    os << "DensityState: matrix is not Hermitian (max |rho - rho^dagger| = " << herm_err << ")";
    throw InvariantError(os.str());
  }
  const cplx tr = matrix_.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os << "DensityState: trace must equal 1 (got " << tr.real() << ")";
    throw InvariantError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTol) {
    std::ostringstream os;
    os << "DensityState: matrix is not positive semidefinite (minimum eigenvalue " << min_eig << ")";
    throw InvariantError(os.str());
  }
}

DensityState::DensityState(const PureState& pure) : DensityState(pure.projector(), pure.dims()) {}

PureState::PureState(Vector amplitudes, Dims dims) : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_, static_cast<int>(amps_.size()), "PureState");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream os;
    os.precision(17);
    os << "PureState: amplitude vector must have unit norm (got " << norm << ")";
    throw InvariantError(os.str());
  }
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvariantError("PureState: cannot normalize a zero or non-finite amplitude vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes), std::move(dims));
}

UnitaryOp::UnitaryOp(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw InvariantError("UnitaryOp: matrix must be square and non-empty");
  }
  const Matrix id = Matrix::Identity(matrix_.rows(), matrix_.cols());
  const double err = (matrix_ * matrix_.adjoint() - id).cwiseAbs().maxCoeff();
  if (err > kUnitaryTol) {
    std::ostringstream os;
    os << "UnitaryOp: U U^dagger must equal the identity (max deviation " << err << ")";
    throw InvariantError(os.str());
  }
}

UnitaryOp UnitaryOp::identity(int dim) { return UnitaryOp(Matrix::Identity(dim, dim)); }

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(matrix_.adjoint()); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {
Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}
}  // namespace

DensityState tensor_product(const DensityState& a, const DensityState& b) {
  return DensityState(kron(a.matrix(), b.matrix()), concat(a.dims(), b.dims()));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  return PureState::normalized(kron(a.amplitudes(), b.amplitudes()), concat(a.dims(), b.dims()));
}

AnyState tensor_product(const AnyState& a, const AnyState& b) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("tensor_product: operands must both be pure or both be mixed");
  }
  if (const auto* pa = std::get_if<PureState>(&a)) {
    return tensor_product(*pa, std::get<PureState>(b));
  }
  return tensor_product(std::get<DensityState>(a), std::get<DensityState>(b));
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] < 0 || perm[k] >= static_cast<int>(perm.size())) {
      throw std::invalid_argument("permutation is not a bijection on subsystem indices");
    }
    inv[perm[k]] = static_cast<int>(k);
  }
  return inv;
}

DensityState permute_subsystems(const DensityState& s, const std::vector<int>& perm) {
  const auto map = permutation_index_map(s.dims(), perm);
  const int n = s.dim();
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = s.matrix()(map[i], map[j]);
  }
  Dims dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) dims[k] = s.dims()[perm[k]];
  return DensityState(std::move(out), std::move(dims));
}

PureState permute_subsystems(const PureState& s, const std::vector<int>& perm) {
  const auto map = permutation_index_map(s.dims(), perm);
  Vector out(s.dim());
  for (int i = 0; i < s.dim(); ++i) out(i) = s.amplitudes()(map[i]);
  Dims dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) dims[k] = s.dims()[perm[k]];
  return PureState(std::move(out), std::move(dims));
}

DensityState partial_trace(const DensityState& s, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be non-empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial_trace: keep set contains duplicates");
  }
  if (keep.front() < 0 || keep.back() >= s.parties()) {
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  }
  if (static_cast<int>(keep.size()) == s.parties()) return s;

  std::vector<int> order = keep;
  for (int k = 0; k < s.parties(); ++k) {
    if (!std::binary_search(keep.begin(), keep.end(), k)) order.push_back(k);
  }
  const auto map = permutation_index_map(s.dims(), order);
  const int kd = block_dim(s.dims(), order, 0, keep.size());
  const int rd = block_dim(s.dims(), order, keep.size(), order.size());
  Matrix out = Matrix::Zero(kd, kd);
  for (int i = 0; i < kd; ++i) {
    for (int j = 0; j < kd; ++j) {
      cplx acc = 0.0;
      for (int r = 0; r < rd; ++r) acc += s.matrix()(map[i * rd + r], map[j * rd + r]);
      out(i, j) = acc;
    }
  }
  Dims dims;
  for (int k : keep) dims.push_back(s.dims()[k]);
  return DensityState(std::move(out), std::move(dims));
}

Eigen::VectorXd spectrum(const DensityState& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix(), Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kPositivityTol) {
      throw InvariantError("spectrum: eigenvalue below -1e-9 signals an invalid state");
    }
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

double von_neumann_entropy(const DensityState& s) {
  const Eigen::VectorXd ev = spectrum(s);
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.0) h -= ev(i) * std::log2(ev(i));
  }
  return h;
}

int numerical_rank(const DensityState& s, double relTol) {
  const Eigen::VectorXd ev = spectrum(s);
  const double top = ev.maxCoeff();
  if (top <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > relTol * top) ++r;
  }
  return r;
}

Matrix amplitude_matrix(const PureState& s, const std::vector<int>& left) {
  const auto order = left_first_order(Bipartition{left}, s.parties());
  const auto map = permutation_index_map(s.dims(), order);
  const int ld = block_dim(s.dims(), order, 0, left.size());
  const int rd = block_dim(s.dims(), order, left.size(), order.size());
  Matrix m(ld, rd);
  for (int i = 0; i < ld; ++i) {
    for (int r = 0; r < rd; ++r) m(i, r) = s.amplitudes()(map[i * rd + r]);
  }
  return m;
}

SchmidtData schmidt(const PureState& s, const Bipartition& cut) {
  const Matrix m = amplitude_matrix(s, cut.left);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  SchmidtData out;
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    // Same relative cut as numerical_rank, applied to squared coefficients.
    if (sv(k) * sv(k) <= kRankRelTol * top * top) break;
    out.coefficients.push_back(sv(k));
    out.left_basis.emplace_back(svd.matrixU().col(k));
    out.right_basis.emplace_back(svd.matrixV().col(k).conjugate());
  }
  return out;
}

cplx overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: total dimensions differ");
  }
  return a.amplitudes().dot(b.amplitudes());
}

Matrix partial_transpose(const DensityState& s, const Bipartition& cut) {
  const auto order = left_first_order(cut, s.parties());
  const auto map = permutation_index_map(s.dims(), order);
  const int ld = block_dim(s.dims(), order, 0, cut.left.size());
  const int rd = block_dim(s.dims(), order, cut.left.size(), order.size());
  Matrix pt(s.dim(), s.dim());
  for (int i = 0; i < ld; ++i) {
    for (int r = 0; r < rd; ++r) {
      for (int j = 0; j < ld; ++j) {
        for (int c = 0; c < rd; ++c) {
          pt(i * rd + r, j * rd + c) = s.matrix()(map[i * rd + c], map[j * rd + r]);
        }
      }
    }
  }
  return pt;
}

bool ppt_check(const DensityState& s, const Bipartition& cut) {
  const Matrix pt = partial_transpose(s, cut);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -kPositivityTol;
}

}  // namespace trinet
