#include "trinet/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "trinet/criteria.hpp"
#include "trinet/states.hpp"

namespace trinet::commands {

namespace {

int require_positive(int x, const char* what) {
  if (x < 1) throw std::invalid_argument(std::string(what) + " must be positive");
  return x;
}

PureState require_pure(const AnyState& s, const std::string& what) {
  if (const auto* p = std::get_if<PureState>(&s)) return *p;
  throw std::invalid_argument(what + ": expected a pure state");
}

ojson dims_json(const Dims& d) {
  ojson a = ojson::array();
  for (int x : d) a.push_back(x);
  return a;
}

double median(std::vector<int> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ojson matrix_json(const Matrix& m) {
  ojson a = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      a.push_back(ojson::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return a;
}

}  // namespace

int exit_code(const Report& r) { return r.any_violated() ? kExitViolation : kExitOk; }

const std::vector<std::string>& state_kinds() {
  static const std::vector<std::string> kinds = {"ghz",       "w",     "ame",       "as3",          "smolin",
                                                 "classical", "noisy-ghz", "ring-cluster", "matmul"};
  return kinds;
}

AnyState make_state(const MakeStateOptions& o) {
  if (o.kind == "ghz") return states::ghz(o.D == 0 ? 2 : require_positive(o.D, "--D"));
  if (o.kind == "w") return states::w_state();
  if (o.kind == "ame") return states::ame_six_qubits();
  if (o.kind == "as3") return states::antisymmetric_qutrit();
  if (o.kind == "smolin") return states::smolin();
  if (o.kind == "classical") return states::classical_corr(o.k, o.D == 0 ? 4 : o.D);
  if (o.kind == "noisy-ghz") return states::noisy_ghz(o.V, o.D == 0 ? 4 : o.D);
  if (o.kind == "ring-cluster") return states::ring_cluster();
  if (o.kind == "matmul") return tensorrank::as_network_state(tensorrank::matmul_tensor());
  throw std::invalid_argument("unknown state kind '" + o.kind + "'");
}

PureState resolve_target(const std::string& name) {
  if (name == "ghz2") return states::ghz(2);
  if (name == "ghz3") return states::ghz(3);
  if (name == "ghz4") return states::ghz(4);
  if (name == "w") return states::w_state();
  if (name == "ame") return states::ame_six_qubits();
  if (name == "as3") return states::antisymmetric_qutrit();
  return require_pure(load_state(name), "target '" + name + "'");
}

PureState target_for_source_dim(const PureState& target, int d) {
  const int D = d * d;
  if (target.parties() != 3) throw std::invalid_argument("target must have three parties");
  for (int x : target.dims()) {
    if (x > D) {
      std::ostringstream os;
      os << "target party dimension " << x << " exceeds d^2 = " << D;
      throw std::invalid_argument(os.str());
    }
  }
  return states::embed(target, {D, D, D});
}

Report cmd_analyze(const std::string& path, const AnalyzeOptions& opts) {
  const AnyState s = load_state(path);
  return cmd_analyze(s, ojson{{"path", path}}, opts);
}

Report cmd_analyze(const AnyState& state, const ojson& inputDescriptor, const AnalyzeOptions& opts) {
  const DensityState rho = as_density(state);
  if (rho.parties() != 3) throw std::invalid_argument("analyze: state must have three parties");

  Report r;
  r.seed = opts.seed;
  r.input = inputDescriptor;
  r.input["kind"] = std::holds_alternative<PureState>(state) ? "pure" : "mixed";
  r.input["dims"] = dims_json(rho.dims());

  r.criteria.emplace_back("obs1", criteria::obs1_check(rho, opts.tolerance));

  const criteria::RankProfile profile = criteria::rank_profile_of(rho, opts.d);
  const criteria::RankFeasibility feas = criteria::rank_feasibility(profile);
  r.criteria.emplace_back("rank", feas.verdict);
  r.payload["rank_profile"] = ojson{{"d", profile.d},
                                    {"global", profile.global_rank},
                                    {"BC", profile.rank_bc},
                                    {"AC", profile.rank_ac},
                                    {"AB", profile.rank_ab},
                                    {"A", profile.rank_a},
                                    {"B", profile.rank_b},
                                    {"C", profile.rank_c}};
  r.payload["rank_assignments_examined"] = feas.assignments_examined;
  if (feas.assignment) {
    const auto& a = *feas.assignment;
    r.payload["rank_assignment"] = ojson{{"r_alpha", a.r_alpha},     {"r_beta", a.r_beta},       {"r_gamma", a.r_gamma},
                                         {"r_gamma_A", a.r_gamma_a}, {"r_gamma_B", a.r_gamma_b}, {"r_alpha_B", a.r_alpha_b},
                                         {"r_alpha_C", a.r_alpha_c}, {"r_beta_C", a.r_beta_c},   {"r_beta_A", a.r_beta_a}};
  }

  if (const auto* pure = std::get_if<PureState>(&state)) {
    r.criteria.emplace_back("obs2", criteria::obs2_pure_check(*pure, opts.tolerance));
    r.criteria.emplace_back("obs4", criteria::gme_qubit_check(*pure));
  }
  return r;
}

ojson decomposition_to_json(const PureTriangleDecomposition& t) {
  ojson sources = ojson::array();
  for (const auto& s : t.sources) sources.push_back(ojson(state_to_json(s)));
  ojson unitaries = ojson::array();
  for (const auto& u : t.unitaries) unitaries.push_back(matrix_json(u.matrix()));
  return ojson{{"d", t.source_dim()}, {"sources", std::move(sources)}, {"unitaries", std::move(unitaries)}};
}

PureTriangleDecomposition decomposition_from_json(const nlohmann::json& j) {
  const auto& src = j.at("sources");
  const auto& uni = j.at("unitaries");
  if (src.size() != 3 || uni.size() != 3) throw std::invalid_argument("decomposition: expected three sources and three unitaries");
  auto pure = [&](int i) { return require_pure(state_from_json(src[i]), "decomposition source"); };
  auto unitary = [&](int i) {
    const auto& data = uni[i];
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(data.size()))));
    if (n * n != static_cast<int>(data.size())) throw std::invalid_argument("decomposition: unitary data is not square");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(data[r * n + c]);
    }
    return UnitaryOp(m);
  };
  PureTriangleDecomposition t{{pure(0), pure(1), pure(2)}, {unitary(0), unitary(1), unitary(2)}};
  t.validate();
  return t;
}

Report cmd_seesaw(const std::string& targetName, const seesaw::SeesawConfig& cfg,
                  const std::optional<std::string>& dumpPath) {
  const PureState target = target_for_source_dim(resolve_target(targetName), cfg.d);
  const seesaw::SeesawResult res = seesaw::optimize_overlap(target, cfg);

  Report r;
  r.seed = cfg.seed;
  r.input = ojson{{"target", targetName}, {"d", cfg.d}, {"restarts", cfg.restarts},
                  {"max_iterations", cfg.max_iterations}, {"convergence_tol", cfg.convergence_tol}};
  r.payload["mu_squared"] = res.mu_squared;
  r.payload["best_restart"] = res.best_restart;
  r.payload["iterations"] = res.iterations;
  r.payload["converged"] = res.converged;
  r.payload["median_iterations"] = median(res.restart_iterations);
  r.payload["restart_mu_squared"] = res.restart_mu_squared;

  if (dumpPath) {
    ojson dump = decomposition_to_json(res.best);
    dump["mu_squared"] = res.mu_squared;
    std::ofstream out(*dumpPath);
    if (!out) throw std::runtime_error("cannot write '" + *dumpPath + "'");
    out << dump.dump(2) << "\n";
    r.payload["decomposition_path"] = *dumpPath;
  }
  return r;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"ghz2", 0.5, 1e-6},     {"ghz3", 4.0 / 9.0, 1e-6}, {"ghz4", 0.5, 1e-6},
      {"w", 6.0 / 9.0, 1e-6}, {"ame", 0.5, 1e-6},        {"as3", 0.5362, 5e-4},
  };
  return rows;
}

Report cmd_table1(std::uint64_t seed, int restarts) {
  Report r;
  r.seed = seed;
  r.input = ojson{{"d", 2}, {"restarts", restarts}};
  ojson rows = ojson::array();
  int deviations = 0;
  for (const auto& row : table1_rows()) {
    seesaw::SeesawConfig cfg;
    cfg.d = 2;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const auto res = seesaw::optimize_overlap(target_for_source_dim(resolve_target(row.target), 2), cfg);
    const double diff = res.mu_squared - row.reference_value;
    const bool deviation = !(std::abs(diff) <= row.tolerance);
    deviations += deviation;
    rows.push_back(ojson{{"target", row.target},
                         {"mu_squared", res.mu_squared},
                         {"reference", row.reference_value},
                         {"difference", diff},
                         {"tolerance", row.tolerance},
                         {"deviation", deviation},
                         {"median_iterations", median(res.restart_iterations)}});
  }
  r.payload["rows"] = std::move(rows);
  r.payload["deviations"] = deviations;
  return r;
}

std::string table1_text(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "target" << std::right << std::setw(14) << "mu^2" << std::setw(12) << "reference"
     << std::setw(13) << "difference" << "  status\n";
  for (const auto& row : r.payload.at("rows")) {
    os << std::left << std::setw(8) << row["target"].get<std::string>() << std::right << std::fixed
       << std::setprecision(8) << std::setw(14) << row["mu_squared"].get<double>() << std::setprecision(6)
       << std::setw(12) << row["reference"].get<double>() << std::scientific << std::setprecision(2) << std::setw(13)
       << row["difference"].get<double>() << std::defaultfloat << "  "
       << (row["deviation"].get<bool>() ? "DEVIATION" : "ok") << "\n";
  }
  return os.str();
}

Report cmd_bound(const std::string& targetName, const bounds::BoundConfig& cfg) {
  const auto res = bounds::overlap_upper_bound(resolve_target(targetName), cfg);
  Report r;
  r.input = ojson{{"target", targetName}, {"grid", cfg.grid}, {"symmetric", cfg.symmetric}};
  r.payload["bound"] = res.value;
  r.payload["angle_a"] = res.angles.a;
  r.payload["angle_b"] = res.angles.b;
  r.payload["angle_c"] = res.angles.c;
  ojson coeffs = ojson::array();
  for (const auto& c : res.target_coefficients) coeffs.push_back(c);
  r.payload["target_schmidt"] = std::move(coeffs);
  return r;
}

MuSource mu_source_from_string(const std::string& s) {
  if (s == "seesaw") return MuSource::seesaw;
  if (s == "bound") return MuSource::bound;
  throw std::invalid_argument("mu source must be 'seesaw' or 'bound', got '" + s + "'");
}

Report cmd_witness(const std::string& targetName, MuSource source, const std::string& statePath,
                   const seesaw::SeesawConfig& cfg) {
  Report r = cmd_witness(targetName, source, load_state(statePath), cfg);
  r.input["state"] = statePath;
  return r;
}

Report cmd_witness(const std::string& targetName, MuSource source, const AnyState& state,
                   const seesaw::SeesawConfig& cfg) {
  const PureState target = resolve_target(targetName);
  double mu2 = 0.0;
  criteria::MuProvenance prov{};
  if (source == MuSource::bound) {
    try {
      mu2 = bounds::overlap_upper_bound(target).value;
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("bound mu source is inapplicable to this target: ") + e.what());
    }
    prov = criteria::MuProvenance::analytical_upper_bound;
  } else {
    mu2 = seesaw::optimize_overlap(target_for_source_dim(target, cfg.d), cfg).mu_squared;
    prov = criteria::MuProvenance::seesaw_lower_bound;
  }
  const auto w = criteria::build_witness(target, std::min(1.0, mu2), prov);
  const auto v = criteria::evaluate_witness(w, as_density(state));

  Report r;
  r.seed = cfg.seed;
  r.input = ojson{{"target", targetName}, {"mu_source", source == MuSource::bound ? "bound" : "seesaw"}};
  if (source == MuSource::seesaw) {
    r.input["d"] = cfg.d;
    r.input["restarts"] = cfg.restarts;
  }
  r.payload["mu_squared"] = w.mu_squared;
  r.payload["provenance"] = criteria::to_string(prov);
  r.payload["value"] = v.value;
  r.payload["certified"] = v.certified;
  r.payload["label"] = v.label;
  if (v.certified) {
    r.criteria.emplace_back("witness", criteria::make_verdict(criteria::Status::violated, v.label,
                                                              {{"tr(W rho)", v.value}, {"mu_squared", w.mu_squared}}));
  }
  return r;
}

Report cmd_tensor_verify(const std::string& decompositionPath, double tolerance) {
  std::ifstream in(decompositionPath);
  if (!in) throw std::runtime_error("cannot read '" + decompositionPath + "'");
  const auto terms = tensorrank::terms_from_json(nlohmann::json::parse(in));
  const auto t = tensorrank::matmul_tensor();
  const auto rec = tensorrank::reconstruct(t.dims, terms);
  double err = 0.0;
  for (std::size_t n = 0; n < t.data.size(); ++n) err = std::max(err, std::abs(rec.data[n] - t.data[n]));
  const bool ok = err <= tolerance;

  Report r;
  r.input = ojson{{"path", decompositionPath}, {"tolerance", tolerance}};
  r.payload["terms"] = terms.size();
  r.payload["max_abs_error"] = err;
  r.payload["verified"] = ok;
  r.criteria.emplace_back(
      "decomposition",
      ok ? criteria::make_verdict(criteria::Status::consistent, "terms reproduce the matrix-multiplication tensor",
                                  {{"terms", static_cast<double>(terms.size())}, {"max_abs_error", err}})
         : criteria::make_verdict(criteria::Status::violated, "terms do not reproduce the matrix-multiplication tensor",
                                  {{"terms", static_cast<double>(terms.size())}, {"max_abs_error", err}}));
  return r;
}

}  // namespace trinet::commands
