#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trinet/linalg.hpp"
#include "trinet/states.hpp"

namespace trinet::seesaw {

// Alternating maximization of |<alpha beta gamma| (U_A x U_B x U_C) |psi>|
// over the three pure sources and the three node unitaries. In that objective
// the product state is arranged in node order and the unitaries act on the
// target; the returned decomposition stores their adjoints so that
// states::itn_state(best) is the optimizing network state itself.

struct SeesawConfig {
  int d = 2;
  int restarts = 100;
  int max_iterations = 1000;
  double convergence_tol = 1e-10;
  std::uint64_t seed = 42;
  // 0: use TRINET_THREADS if set, else the hardware concurrency.
  int threads = 0;

  void validate() const;
};

struct SeesawResult {
  double mu_squared = 0.0;
  PureTriangleDecomposition best;
  int iterations = 0;          // sweeps of the winning restart
  std::vector<double> trace;   // objective after every single update, starting from the random draw
  bool converged = false;
  int best_restart = 0;
  std::vector<double> restart_mu_squared;
  std::vector<int> restart_iterations;
};

// Raised when the partial inner product for a source update vanishes.
class DegenerateUpdate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |<alpha beta gamma| (U_A x U_B x U_C) |psi>| with the product in node order.
double objective(const PureState& target, const std::array<PureState, 3>& sources,
                 const std::array<UnitaryOp, 3>& unitaries);

/// Normalized <other two sources | psi~> for the free slot, where
/// psi~ = (U_A x U_B x U_C) psi.
PureState optimal_source_state(const PureState& target, const std::array<PureState, 3>& sources,
                               const std::array<UnitaryOp, 3>& unitaries, SourceSlot slot);

/// tr_{other nodes}(|psi'><alpha beta gamma|) where psi' carries every unitary
/// except the one at `node`.
Matrix node_reduced_operator(const PureState& target, const std::array<PureState, 3>& sources,
                             const std::array<UnitaryOp, 3>& unitaries, Node node);

struct UnitaryUpdate {
  UnitaryOp unitary;
  double objective;  // sum of singular values = |tr(U rhoA)|
};

/// With rhoA = W D V^dagger, returns U = V W^dagger, which maximizes |tr(U rhoA)|.
UnitaryUpdate optimal_unitary(const Matrix& rhoA);

/// One restart; deterministic in (cfg.seed, restart_index).
SeesawResult run_restart(const PureState& target, const SeesawConfig& cfg, int restart_index);

SeesawResult optimize_overlap(const PureState& target, const SeesawConfig& cfg);

}  // namespace trinet::seesaw
