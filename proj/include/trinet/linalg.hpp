#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace trinet {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<int>;

// Largest total Hilbert-space dimension accepted anywhere in the library.
inline constexpr int kMaxTotalDim = 4096;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kRankRelTol = 1e-8;

/// Thrown when a value violates one of the documented type invariants.
/// The message always names the invariant.
class InvariantError : public std::invalid_argument {
 public:
  explicit InvariantError(const std::string& what) : std::invalid_argument(what) {}
};

int total_dim(const Dims& dims);

class PureState;

/// Mixed state: Hermitian, unit trace, numerically positive matrix over
/// an ordered list of subsystems.
class DensityState {
 public:
  DensityState(Matrix matrix, Dims dims);
  explicit DensityState(const PureState& pure);

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  int parties() const { return static_cast<int>(dims_.size()); }

 private:
  Matrix matrix_;
  Dims dims_;
};

/// Unit-norm amplitude vector over an ordered list of subsystems.
class PureState {
 public:
  PureState(Vector amplitudes, Dims dims);

  // Rescales `amplitudes` to unit norm; rejects the zero vector.
  static PureState normalized(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const { return amps_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  int parties() const { return static_cast<int>(dims_.size()); }

  Matrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  Vector amps_;
  Dims dims_;
};

class UnitaryOp {
 public:
  explicit UnitaryOp(Matrix matrix);
  static UnitaryOp identity(int dim);

  const Matrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  UnitaryOp adjoint() const;

 private:
  Matrix matrix_;
};

struct SchmidtData {
  std::vector<double> coefficients;  // non-increasing
  std::vector<Vector> left_basis;
  std::vector<Vector> right_basis;
};

/// Subsystems listed in `left`; everything else forms the right block.
struct Bipartition {
  std::vector<int> left;
};

using AnyState = std::variant<PureState, DensityState>;

DensityState tensor_product(const DensityState& a, const DensityState& b);
PureState tensor_product(const PureState& a, const PureState& b);
// Mixed-kind operands throw.
AnyState tensor_product(const AnyState& a, const AnyState& b);

/// Reduced state on the subsystems in `keep` (kept in ascending index order).
DensityState partial_trace(const DensityState& s, std::vector<int> keep);

/// New subsystem k is old subsystem perm[k].
DensityState permute_subsystems(const DensityState& s, const std::vector<int>& perm);
PureState permute_subsystems(const PureState& s, const std::vector<int>& perm);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

/// Eigenvalues in ascending order; entries in [-1e-9, 0) are clamped to zero
/// and anything below -1e-9 throws.
Eigen::VectorXd spectrum(const DensityState& s);

/// Entropy in bits.
double von_neumann_entropy(const DensityState& s);

/// Number of eigenvalues above relTol * largest eigenvalue.
int numerical_rank(const DensityState& s, double relTol = kRankRelTol);

SchmidtData schmidt(const PureState& s, const Bipartition& cut);

/// <a|b>
cplx overlap(const PureState& a, const PureState& b);

/// Partial transpose on the complement of cut.left; true iff the result has
/// minimum eigenvalue >= -1e-9.
bool ppt_check(const DensityState& s, const Bipartition& cut);

/// Matrix with the subsystems outside cut.left transposed.
Matrix partial_transpose(const DensityState& s, const Bipartition& cut);

// Kronecker products; the left operand is the more significant factor.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Row-major reshape helper: the amplitude matrix with rows indexed by the
// `left` subsystems (in the given order) and columns by the rest.
Matrix amplitude_matrix(const PureState& s, const std::vector<int>& left);

}  // namespace trinet
