#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trinet/commands.hpp"

using namespace trinet;

namespace {

struct Globals {
  std::uint64_t seed = 42;
  bool json = false;
  double tolerance = criteria::kDecisionThreshold;
};

int emit(const Report& r, const Globals& g, const std::string& text) {
  if (g.json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    std::cerr << text;
  } else {
    std::cout << text;
  }
  return commands::exit_code(r);
}

int emit(const Report& r, const Globals& g) { return emit(r, g, report_summary(r)); }

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-network state preparability toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--json", g.json, "Print the JSON report on stdout and the summary on stderr");
  app.add_option("--tolerance", g.tolerance, "Decision threshold for entropy and entanglement tests")
      ->capture_default_str();

  commands::MakeStateOptions mk;
  std::string mkOut;
  auto* make = app.add_subcommand("make-state", "Write a catalog state to a JSON file");
  make->add_option("--kind", mk.kind, "State kind")->required()->check(CLI::IsMember(commands::state_kinds()));
  make->add_option("--D", mk.D, "Local dimension (ghz, classical, noisy-ghz)");
  make->add_option("--k", mk.k, "Number of classical values (classical)")->capture_default_str();
  make->add_option("--V", mk.V, "Visibility (noisy-ghz)")->capture_default_str();
  make->add_option("-o,--output", mkOut, "Output file")->required();

  std::string analyzePath;
  commands::AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Run the necessary-condition battery on a state file");
  analyze->add_option("file", analyzePath, "State file")->required();
  analyze->add_option("--d", an.d, "Source dimension (default: smallest d with d^2 >= party dimension)");

  seesaw::SeesawConfig sc;
  std::string target = "ghz2";
  std::optional<std::string> dump;
  auto* see = app.add_subcommand("seesaw", "Maximize the overlap of a target with network states");
  see->add_option("--target", target, "ghz2|ghz3|ghz4|w|ame|as3|file.json")->capture_default_str();
  see->add_option("--d", sc.d, "Source dimension")->capture_default_str();
  see->add_option("--restarts", sc.restarts, "Random restarts")->capture_default_str();
  see->add_option("--max-iterations", sc.max_iterations, "Sweeps per restart")->capture_default_str();
  see->add_option("--dump-decomposition", dump, "Write the best decomposition to this file");

  int tableRestarts = 100;
  auto* table = app.add_subcommand("table1", "Run the see-saw on the six reference targets");
  table->add_option("--restarts", tableRestarts, "Random restarts per target")->capture_default_str();

  bounds::BoundConfig bc;
  auto* bound = app.add_subcommand("bound", "Schmidt-coefficient upper bound for qubit sources");
  bound->add_option("--target", target, "ghz2|ghz4|w|ame|file.json")->capture_default_str();
  bound->add_option("--grid", bc.grid, "Grid points per angle")->capture_default_str();
  bound->add_option("--refine-rounds", bc.refine_rounds, "Local refinement rounds")->capture_default_str();
  bound->add_flag("--symmetric", bc.symmetric, "Restrict to ordered angles");

  std::string muSource = "seesaw";
  std::string witnessState;
  auto* witness = app.add_subcommand("witness", "Evaluate a fidelity witness on a state file");
  witness->add_option("--target", target, "ghz2|ghz3|ghz4|w|ame|as3|file.json")->capture_default_str();
  witness->add_option("--mu-source", muSource, "seesaw|bound")->capture_default_str()->check(
      CLI::IsMember({"seesaw", "bound"}));
  witness->add_option("--state", witnessState, "State file")->required();
  witness->add_option("--d", sc.d, "Source dimension for the see-saw")->capture_default_str();
  witness->add_option("--restarts", sc.restarts, "See-saw restarts")->capture_default_str();

  std::string verifyPath, tensorOut;
  bool emitMatmul = false, emitStrassen = false;
  auto* tensor = app.add_subcommand("tensor", "Matrix-multiplication tensor utilities");
  auto* verifyOpt = tensor->add_option("--verify", verifyPath, "Decomposition file to check");
  auto* matmulOpt = tensor->add_flag("--emit-matmul", emitMatmul, "Write the 2x2 matrix-multiplication tensor");
  auto* strassenOpt = tensor->add_flag("--emit-strassen", emitStrassen, "Write the seven-term Strassen decomposition");
  tensor->add_option("-o,--output", tensorOut, "Output file");
  verifyOpt->excludes(matmulOpt)->excludes(strassenOpt);
  matmulOpt->excludes(strassenOpt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? commands::kExitOk : commands::kExitError;
  }

  try {
    sc.seed = g.seed;
    an.seed = g.seed;
    an.tolerance = g.tolerance;

    if (*make) {
      save_state(mkOut, commands::make_state(mk));
      std::cerr << "wrote " << mk.kind << " state to " << mkOut << "\n";
      return commands::kExitOk;
    }
    if (*analyze) return emit(commands::cmd_analyze(analyzePath, an), g);
    if (*see) return emit(commands::cmd_seesaw(target, sc, dump), g);
    if (*table) {
      const Report r = commands::cmd_table1(g.seed, tableRestarts);
      return emit(r, g, commands::table1_text(r));
    }
    if (*bound) return emit(commands::cmd_bound(target, bc), g);
    if (*witness) {
      return emit(commands::cmd_witness(target, commands::mu_source_from_string(muSource), witnessState, sc), g);
    }
    if (*tensor) {
      if (!verifyPath.empty()) return emit(commands::cmd_tensor_verify(verifyPath), g);
      if (emitMatmul || emitStrassen) {
        if (tensorOut.empty()) throw std::invalid_argument("tensor: -o is required with --emit-matmul/--emit-strassen");
        write_json(tensorOut, emitMatmul ? tensorrank::tensor_to_json(tensorrank::matmul_tensor())
                                         : tensorrank::terms_to_json(tensorrank::strassen_terms()));
        std::cerr << "wrote " << tensorOut << "\n";
        return commands::kExitOk;
      }
      throw std::invalid_argument("tensor: one of --verify, --emit-matmul, --emit-strassen is required");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return commands::kExitError;
  }
  return commands::kExitError;
}
