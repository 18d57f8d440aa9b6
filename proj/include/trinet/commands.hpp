#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinet/bounds.hpp"
#include "trinet/report.hpp"
#include "trinet/seesaw.hpp"
#include "trinet/state_io.hpp"
#include "trinet/tensorrank.hpp"

namespace trinet::commands {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

/// 2 if any criterion in the report is violated, 0 otherwise.
int exit_code(const Report& r);

struct MakeStateOptions {
  std::string kind;
  int D = 0;        // 0: kind default
  int k = 2;
  double V = 0.5;
};

const std::vector<std::string>& state_kinds();
AnyState make_state(const MakeStateOptions& opts);

/// Named targets: ghz2, ghz3, ghz4, w, ame, as3; anything else is a pure-state file path.
PureState resolve_target(const std::string& spec);
/// Embeds a target into three parties of dimension d^2.
PureState target_for_source_dim(const PureState& target, int d);

struct AnalyzeOptions {
  int d = 0;  // 0: infer from the party dimension
  double tolerance = criteria::kDecisionThreshold;
  std::uint64_t seed = 42;
};

Report cmd_analyze(const std::string& path, const AnalyzeOptions& opts);
Report cmd_analyze(const AnyState& state, const ojson& inputDescriptor, const AnalyzeOptions& opts);

Report cmd_seesaw(const std::string& targetName, const seesaw::SeesawConfig& cfg,
                  const std::optional<std::string>& dumpPath = std::nullopt);

struct Table1Row {
  std::string target;
  double reference_value;
  double tolerance;
};

const std::vector<Table1Row>& table1_rows();

/// Runs every table row at d = 2. Rows outside tolerance carry "deviation": true.
Report cmd_table1(std::uint64_t seed, int restarts = 100);

Report cmd_bound(const std::string& targetName, const bounds::BoundConfig& cfg);

enum class MuSource { seesaw, bound };
MuSource mu_source_from_string(const std::string& s);

Report cmd_witness(const std::string& targetName, MuSource source, const std::string& statePath,
                   const seesaw::SeesawConfig& cfg);
Report cmd_witness(const std::string& targetName, MuSource source, const AnyState& state,
                   const seesaw::SeesawConfig& cfg);

/// Verifies a decomposition file against the 2x2 matrix-multiplication tensor.
Report cmd_tensor_verify(const std::string& decompositionPath, double tolerance = 1e-10);

}  // namespace trinet::commands

namespace trinet::commands {

/// Fixed-width comparison table for a cmd_table1 report.
std::string table1_text(const Report& r);

/// {"mu_squared", "sources": [state...], "unitaries": [[[re, im], ...] row-major, ...]}
ojson decomposition_to_json(const PureTriangleDecomposition& t);
PureTriangleDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace trinet::commands
