#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinet/linalg.hpp"

namespace trinet::criteria {

// Threshold for entropy- and overlap-based verdicts.
inline constexpr double kDecisionThreshold = 1e-6;

enum class Status { consistent, violated, inconclusive };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct Verdict {
  Status status = Status::inconclusive;
  std::string detail;
  std::vector<std::pair<std::string, double>> numbers;

  // Throws if `name` is absent.
  double number(const std::string& name) const;
  bool has_number(const std::string& name) const;
};

/// Builds a verdict; violated verdicts must carry at least one number.
Verdict make_verdict(Status status, std::string detail, std::vector<std::pair<std::string, double>> numbers);

/// Observed ranks of a three-party state. rank_bc is rk(tr_A rho), etc.
struct RankProfile {
  int global_rank = 1;
  int rank_bc = 1, rank_ac = 1, rank_ab = 1;
  int rank_a = 1, rank_b = 1, rank_c = 1;
  int d = 2;

  void validate() const;
  bool operator==(const RankProfile&) const = default;
};

/// Source ranks (r_alpha, ...) and source-marginal ranks (r_gamma^A = rank of
/// source gamma's half held by A, ...).
struct RankAssignment {
  int r_alpha = 1, r_beta = 1, r_gamma = 1;
  int r_gamma_a = 1, r_gamma_b = 1;
  int r_alpha_b = 1, r_alpha_c = 1;
  int r_beta_c = 1, r_beta_a = 1;

  bool operator==(const RankAssignment&) const = default;
};

struct RankFeasibility {
  Verdict verdict;
  std::optional<RankAssignment> assignment;  // lexicographically smallest solution
  long long assignments_examined = 0;
  long long assignments_total = 0;
};

enum class MuProvenance { seesaw_lower_bound, analytical_upper_bound };

const char* to_string(MuProvenance p);

struct WitnessOp {
  double mu_squared;
  PureState target;
  MuProvenance provenance;
};

struct WitnessValue {
  double value;    // tr(W rho)
  bool certified;  // negative value backed by an analytical bound
  std::string label;
};

/// Tripartite mutual information in bits.
double tmi(const DensityState& s);

Verdict obs1_check(const DensityState& s, double threshold = kDecisionThreshold);

/// Numerical ranks of the state and its marginals. `d` is the source
/// dimension; 0 infers the smallest d with d^2 >= party dimension.
RankProfile rank_profile_of(const DensityState& s, int d = 0);

/// Exhaustive search of the seven rank equations over every assignment.
RankFeasibility rank_feasibility(const RankProfile& p);

/// Additivity of the entanglement across each cut, applied where both
/// two-party marginals can be certified separable.
Verdict obs2_pure_check(const PureState& s, double threshold = kDecisionThreshold);

/// A pure state whose single-party marginals all have rank two is a
/// three-qubit GME state, which no correlated network can prepare.
Verdict gme_qubit_check(const PureState& s);

WitnessOp build_witness(PureState target, double muSquared, MuProvenance provenance);
WitnessValue evaluate_witness(const WitnessOp& w, const DensityState& s);

// Separability certificate for a two-party state; exposed for tests.
enum class SeparabilityCertificate { diagonal_product_basis, product_support, ppt_low_dimension, entangled, undecided };
SeparabilityCertificate certify_separable(const DensityState& two_party);
const char* to_string(SeparabilityCertificate c);

}  // namespace trinet::criteria
