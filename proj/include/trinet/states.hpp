#pragma once

#include <array>
#include <vector>

#include "trinet/linalg.hpp"

namespace trinet {

// Triangle-network subsystem conventions.
//
// Sources emit in pair order (source-major):
//   alpha = (B_alpha, C_alpha), beta = (A_beta, C_beta), gamma = (A_gamma, B_gamma)
// Nodes hold their two halves listed in source order (node-major):
//   A = (A_beta, A_gamma), B = (B_alpha, B_gamma), C = (C_alpha, C_beta)
//
// kNodeFromSource[k] is the source-major position of the k-th node-major
// subsystem, i.e. the permutation passed to permute_subsystems.
inline constexpr std::array<int, 6> kNodeFromSource = {2, 4, 0, 5, 1, 3};

enum class SourceSlot { alpha = 0, beta = 1, gamma = 2 };
enum class Node { A = 0, B = 1, C = 2 };

/// Sources are bipartite states on dims [d, d]; unitaries act on d^2.
struct TriangleDecomposition {
  std::array<DensityState, 3> sources;  // alpha, beta, gamma
  std::array<UnitaryOp, 3> unitaries;   // U_A, U_B, U_C

  int source_dim() const;
  void validate() const;
};

struct PureTriangleDecomposition {
  std::array<PureState, 3> sources;
  std::array<UnitaryOp, 3> unitaries;

  int source_dim() const;
  void validate() const;
  TriangleDecomposition to_mixed() const;
};

struct CtnMixture {
  std::vector<double> weights;
  std::vector<TriangleDecomposition> components;
};

namespace states {

/// Reorders a six-subsystem source-major state into node-major order and
/// groups it as three parties of dimension d^2.
PureState source_to_node_order(const PureState& sources);
DensityState source_to_node_order(const DensityState& sources);
/// Inverse of source_to_node_order; returns six subsystems of dimension d.
PureState node_to_source_order(const PureState& nodes, int d);

DensityState itn_state(const TriangleDecomposition& t);
PureState itn_state(const PureTriangleDecomposition& t);
DensityState ctn_state(const CtnMixture& m);

/// (1/sqrt(D)) sum_{j<D} |jjj>
PureState ghz(int D);
/// (1/k) sum_{j<k} |jjj><jjj| on dims [D, D, D]
DensityState classical_corr(int k, int D);
DensityState noisy_ghz(double V, int D);
/// Six qubits stabilized by X^6 and Z^6, grouped as [4, 4, 4].
DensityState smolin();
PureState w_state();
PureState antisymmetric_qutrit();
/// Six-qubit absolutely maximally entangled graph state grouped as [4, 4, 4].
/// Verifies every three-qubit marginal is maximally mixed before returning.
PureState ame_six_qubits();
/// Edge list of the graph behind ame_six_qubits().
const std::vector<std::array<int, 2>>& ame_graph_edges();

PureState embed(const PureState& s, const Dims& targetDims);

PureState basis_state(const Dims& dims, const std::vector<int>& digits);
PureState product_state(int D);
/// (1/sqrt(d)) sum_i |ii>
PureState bell_state(int d = 2);

/// Bell sources with a controlled-Z at every node.
PureTriangleDecomposition ring_cluster_decomposition();
PureState ring_cluster();

/// Bell sources; U_A rotates A_beta controlled on A_gamma, U_C rotates C_beta
/// controlled on C_alpha (rotation (1 -/+ i sigma_y)/sqrt(2)), U_B = 1.
/// Its overlap with ghz(4) squared is exactly 1/2.
PureTriangleDecomposition bell_ghz4_decomposition();

}  // namespace states
}  // namespace trinet
