#pragma once

#include <array>
#include <vector>

#include "trinet/linalg.hpp"

namespace trinet::bounds {

/// Schmidt angles of the three qubit-pair sources; source alpha has
/// coefficients [cos a, sin a], and likewise for b (beta) and c (gamma).
struct SourceAngles {
  double a = 0.0, b = 0.0, c = 0.0;
};

enum class Cut { A_BC = 0, B_AC = 1, C_AB = 2 };

/// (sum_i s_i t_i)^2 for two non-increasing Schmidt vectors with unit
/// squared sum; the shorter one is padded with zeros.
double bipartite_overlap_bound(const std::vector<double>& targetCoeffs, const std::vector<double>& itnCoeffs);

/// Sorted Schmidt coefficients (length 4) of a qubit-source network state
/// across `cut`: the product of the coefficient pairs of the two sources
/// that cross it.
std::array<double, 4> itn_cut_coefficients(const SourceAngles& angles, Cut cut);

struct BoundConfig {
  int grid = 200;                // points per axis on the full cube
  int refine_rounds = 40;        // local rounds
  double refine_shrink = 2.0;    // window shrink factor per round
  int refine_grid = 21;          // points per axis inside a refinement window
  bool symmetric = false;        // restrict to pi/4 >= a >= b >= c >= 0
};

struct BoundResult {
  double value = 1.0;
  SourceAngles angles;
  std::array<std::vector<double>, 3> target_coefficients;  // per cut, padded to 4
};

/// max over angles of min over cuts of bipartite_overlap_bound: an upper
/// bound on |<phi|psi>|^2 over pure network states phi with qubit sources.
BoundResult overlap_upper_bound(const PureState& target, const BoundConfig& cfg = {});

}  // namespace trinet::bounds
