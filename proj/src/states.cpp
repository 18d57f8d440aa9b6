#include "trinet/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trinet {

namespace {

void require_pair_dims(const Dims& dims, int d, const char* what) {
  if (dims.size() != 2 || dims[0] != d || dims[1] != d) {
    std::ostringstream os;
    os << what << ": every source must live on dims [" << d << ", " << d << "]";
    throw std::invalid_argument(os.str());
  }
}

Matrix node_unitary(const std::array<UnitaryOp, 3>& u) {
  return kron(kron(u[0].matrix(), u[1].matrix()), u[2].matrix());
}

Matrix pauli_power(const Matrix& p, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, p);
  return out;
}

}  // namespace

int TriangleDecomposition::source_dim() const {
  return sources[0].dims().empty() ? 0 : sources[0].dims()[0];
}

void TriangleDecomposition::validate() const {
  const int d = source_dim();
  for (const auto& s : sources) require_pair_dims(s.dims(), d, "TriangleDecomposition");
  for (const auto& u : unitaries) {
    if (u.dim() != d * d) throw std::invalid_argument("TriangleDecomposition: node unitaries must have dimension d^2");
  }
}

int PureTriangleDecomposition::source_dim() const {
  return sources[0].dims().empty() ? 0 : sources[0].dims()[0];
}

void PureTriangleDecomposition::validate() const {
  const int d = source_dim();
  for (const auto& s : sources) require_pair_dims(s.dims(), d, "PureTriangleDecomposition");
  for (const auto& u : unitaries) {
    if (u.dim() != d * d) throw std::invalid_argument("PureTriangleDecomposition: node unitaries must have dimension d^2");
  }
}

TriangleDecomposition PureTriangleDecomposition::to_mixed() const {
  return TriangleDecomposition{{DensityState(sources[0]), DensityState(sources[1]), DensityState(sources[2])},
                               unitaries};
}

namespace states {

const std::vector<int> kPerm(kNodeFromSource.begin(), kNodeFromSource.end());

PureState source_to_node_order(const PureState& sources) {
  if (sources.parties() != 6) throw std::invalid_argument("source_to_node_order: expected six subsystems");
  const int d = sources.dims()[0];
  const PureState p = permute_subsystems(sources, kPerm);
  return PureState(p.amplitudes(), {d * d, d * d, d * d});
}

DensityState source_to_node_order(const DensityState& sources) {
  if (sources.parties() != 6) throw std::invalid_argument("source_to_node_order: expected six subsystems");
  const int d = sources.dims()[0];
  const DensityState p = permute_subsystems(sources, kPerm);
  return DensityState(p.matrix(), {d * d, d * d, d * d});
}

PureState node_to_source_order(const PureState& nodes, int d) {
  const PureState split(nodes.amplitudes(), Dims(6, d));
  return permute_subsystems(split, inverse_permutation(kPerm));
}

DensityState itn_state(const TriangleDecomposition& t) {
  t.validate();
  const DensityState product = tensor_product(tensor_product(t.sources[0], t.sources[1]), t.sources[2]);
  const DensityState nodes = source_to_node_order(product);
  const Matrix u = node_unitary(t.unitaries);
  Matrix rho = u * nodes.matrix() * u.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityState(std::move(rho), nodes.dims());
}

PureState itn_state(const PureTriangleDecomposition& t) {
  t.validate();
  const PureState product = tensor_product(tensor_product(t.sources[0], t.sources[1]), t.sources[2]);
  const PureState nodes = source_to_node_order(product);
  return PureState::normalized(node_unitary(t.unitaries) * nodes.amplitudes(), nodes.dims());
}

DensityState ctn_state(const CtnMixture& m) {
  if (m.components.empty()) throw std::invalid_argument("ctn_state: mixture needs at least one component");
  if (m.weights.size() != m.components.size()) {
    throw std::invalid_argument("ctn_state: one weight per component required");
  }
  double total = 0.0;
  for (double w : m.weights) {
    if (w < 0.0) throw InvariantError("CtnMixture: weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvariantError("CtnMixture: weights must sum to 1");
  const int d = m.components.front().source_dim();
  Matrix rho;
  Dims dims;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    if (m.components[i].source_dim() != d) {
      throw std::invalid_argument("ctn_state: all components must share the source dimension d");
    }
    const DensityState part = itn_state(m.components[i]);
    if (i == 0) {
      rho = m.weights[i] * part.matrix();
      dims = part.dims();
    } else {
      rho += m.weights[i] * part.matrix();
    }
  }
  return DensityState(std::move(rho), std::move(dims));
}

PureState ghz(int D) {
  if (D < 2) throw std::invalid_argument("ghz: local dimension must be at least 2");
  Vector v = Vector::Zero(D * D * D);
  for (int j = 0; j < D; ++j) v(j * D * D + j * D + j) = 1.0;
  return PureState::normalized(std::move(v), {D, D, D});
}

DensityState classical_corr(int k, int D) {
  if (D < 1 || k < 1 || k > D) throw std::invalid_argument("classical_corr: require 1 <= k <= D");
  Matrix m = Matrix::Zero(D * D * D, D * D * D);
  for (int j = 0; j < k; ++j) {
    const int idx = j * D * D + j * D + j;
    m(idx, idx) = 1.0 / k;
  }
  return DensityState(std::move(m), {D, D, D});
}

DensityState noisy_ghz(double V, int D) {
  if (!(V >= 0.0 && V <= 1.0)) throw std::invalid_argument("noisy_ghz: visibility must lie in [0, 1]");
  const PureState g = ghz(D);
  const int n = D * D * D;
  Matrix m = V * g.projector() + (1.0 - V) * Matrix::Identity(n, n) / static_cast<double>(n);
  return DensityState(std::move(m), {D, D, D});
}

DensityState smolin() {
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  const Matrix id = Matrix::Identity(64, 64);
  // (1 + g1)(1 + g2) / 64 with g1 g2 = -Y^6: the normalized projector onto
  // the joint +1 eigenspace of X^6 and Z^6.
  Matrix m = (id + pauli_power(x, 6) - pauli_power(y, 6) + pauli_power(z, 6)) / 64.0;
  return DensityState(std::move(m), {4, 4, 4});
}

PureState w_state() {
  Vector v = Vector::Zero(8);
  v(1) = v(2) = v(4) = 1.0;
  return PureState::normalized(std::move(v), {2, 2, 2});
}

PureState antisymmetric_qutrit() {
  Vector v = Vector::Zero(27);
  std::array<int, 3> p = {0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    }
    v(p[0] * 9 + p[1] * 3 + p[2]) = (inversions % 2 == 0) ? 1.0 : -1.0;
  } while (std::next_permutation(p.begin(), p.end()));
  return PureState::normalized(std::move(v), {3, 3, 3});
}

const std::vector<std::array<int, 2>>& ame_graph_edges() {
  // Wheel on six vertices: hub 0 plus the 5-cycle 1-4-3-2-5-1.
  static const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}};
  return edges;
}

PureState ame_six_qubits() {
  Vector v(64);
  for (int x = 0; x < 64; ++x) {
    int parity = 0;
    for (const auto& e : ame_graph_edges()) {
      parity ^= ((x >> (5 - e[0])) & 1) & ((x >> (5 - e[1])) & 1);
    }
    v(x) = parity ? -1.0 : 1.0;
  }
  const PureState qubits = PureState::normalized(std::move(v), Dims(6, 2));

  const Matrix mixed8 = Matrix::Identity(8, 8) / 8.0;
  for (int mask = 0; mask < 64; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
    std::vector<int> left;
    for (int q = 0; q < 6; ++q) {
      if (mask & (1 << q)) left.push_back(q);
    }
    const Matrix a = amplitude_matrix(qubits, left);
    if ((a * a.adjoint() - mixed8).cwiseAbs().maxCoeff() > 1e-10) {
      throw std::logic_error("ame_six_qubits: construction failed the three-qubit marginal self-check");
    }
  }
  return PureState(qubits.amplitudes(), {4, 4, 4});
}

PureState embed(const PureState& s, const Dims& targetDims) {
  if (targetDims.size() != s.dims().size()) {
    throw std::invalid_argument("embed: target must have the same number of subsystems");
  }
  for (std::size_t k = 0; k < targetDims.size(); ++k) {
    if (targetDims[k] < s.dims()[k]) throw std::invalid_argument("embed: target dimensions cannot shrink");
  }
  const int n = static_cast<int>(targetDims.size());
  Vector v = Vector::Zero(total_dim(targetDims));
  std::vector<int> digit(n, 0);
  for (int flat = 0; flat < s.dim(); ++flat) {
    int target = 0;
    for (int k = 0; k < n; ++k) target = target * targetDims[k] + digit[k];
    v(target) = s.amplitudes()(flat);
    for (int k = n - 1; k >= 0; --k) {
      if (++digit[k] < s.dims()[k]) break;
      digit[k] = 0;
    }
  }
  return PureState(std::move(v), targetDims);
}

PureState basis_state(const Dims& dims, const std::vector<int>& digits) {
  if (digits.size() != dims.size()) throw std::invalid_argument("basis_state: one digit per subsystem");
  int idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims[k]) throw std::invalid_argument("basis_state: digit out of range");
    idx = idx * dims[k] + digits[k];
  }
  Vector v = Vector::Zero(total_dim(dims));
  v(idx) = 1.0;
  return PureState(std::move(v), dims);
}

PureState product_state(int D) { return basis_state({D, D, D}, {0, 0, 0}); }

PureState bell_state(int d) {
  Vector v = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return PureState::normalized(std::move(v), {d, d});
}

PureTriangleDecomposition ring_cluster_decomposition() {
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  const PureState bell = bell_state(2);
  return PureTriangleDecomposition{{bell, bell, bell}, {UnitaryOp(cz), UnitaryOp(cz), UnitaryOp(cz)}};
}

PureState ring_cluster() { return itn_state(ring_cluster_decomposition()); }

PureTriangleDecomposition bell_ghz4_decomposition() {
  Matrix minus(2, 2), plus(2, 2);  // (1 -/+ i sigma_y) / sqrt(2)
  minus << 1, -1, 1, 1;
  plus << 1, 1, -1, 1;
  minus /= std::sqrt(2.0);
  plus /= std::sqrt(2.0);
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  // Node A = (A_beta, A_gamma): control on the second factor.
  const Matrix ua = kron(minus, p0) + kron(plus, p1);
  // Node C = (C_alpha, C_beta): control on the first factor.
  const Matrix uc = kron(p0, minus) + kron(p1, plus);
  const PureState bell = bell_state(2);
  return PureTriangleDecomposition{{bell, bell, bell}, {UnitaryOp(ua), UnitaryOp::identity(4), UnitaryOp(uc)}};
}

}  // namespace states
}  // namespace trinet
