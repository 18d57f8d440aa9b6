// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "trinet/bounds.hpp"
#include "trinet/commands.hpp"
#include "trinet/criteria.hpp"
#include "trinet/random.hpp"
#include "trinet/seesaw.hpp"
#include "trinet/states.hpp"
#include "trinet/tensorrank.hpp"

using namespace trinet;
using criteria::Status;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

PureState table_target(const std::string& name) {
  return commands::target_for_source_dim(commands::resolve_target(name), 2);
}

seesaw::SeesawConfig table_config() {
  seesaw::SeesawConfig c;
  c.d = 2;
  c.restarts = 100;
  c.seed = 42;
  return c;
}

Outcome table1() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream os;
  for (const auto& row : commands::table1_rows()) {
    const double mu2 = seesaw::optimize_overlap(table_target(row.target), table_config()).mu_squared;
    const bool ok = std::abs(mu2 - row.reference_value) <= row.tolerance;
    pass = pass && ok;
    os << row.target << "=" << fmt(mu2, 8) << (ok ? "" : " (expected " + fmt(row.reference_value, 6) + ")") << "; ";
  }
  const double secs = seconds_since(t0);
  pass = pass && secs < 300.0;
  os << fmt(secs, 3) << " s";
  return {pass, os.str()};
}

Outcome ghz2_bound() {
  const auto t0 = Clock::now();
  const double b = bounds::overlap_upper_bound(states::ghz(2)).value;
  const double secs = seconds_since(t0);
  const double expected = std::pow(std::cos(std::numbers::pi / 8), 2);
  return {std::abs(b - expected) <= 1e-6 && secs < 30.0,
          "bound=" + fmt(b, 12) + " cos^2(pi/8)=" + fmt(expected, 12) + "; " + fmt(secs, 3) + " s"};
}

Outcome tmi_exact() {
  bool pass = true;
  std::ostringstream os;
  for (int k = 1; k <= 4; ++k) {
    const double i3 = criteria::tmi(states::classical_corr(k, 4));
    pass = pass && std::abs(i3 - std::log2(k)) <= 1e-9;
    os << "k=" << k << ": " << fmt(i3, 12) << "; ";
  }
  return {pass, os.str()};
}

Outcome obs1_generator() {
  Rng rng = make_rng(42, 1000);
  std::uniform_int_distribution<int> rank(1, 4);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    TriangleDecomposition t{{random_density(rng, {2, 2}, rank(rng)), random_density(rng, {2, 2}, rank(rng)),
                             random_density(rng, {2, 2}, rank(rng))},
                            {haar_unitary(rng, 4), haar_unitary(rng, 4), haar_unitary(rng, 4)}};
    worst = std::max(worst, std::abs(criteria::tmi(states::itn_state(t))));
  }
  return {worst < 1e-8, "max |I3| over 100 networks = " + fmt(worst, 3)};
}

Outcome noisy_ghz() {
  bool pass = true;
  std::ostringstream os;
  for (double v : {0.01, 0.1, 0.5, 1.0}) {
    const auto verdict = criteria::obs1_check(states::noisy_ghz(v, 4));
    const bool ok = verdict.status == Status::violated;
    pass = pass && ok;
    os << "V=" << v << ": " << criteria::to_string(verdict.status) << " (I3=" << fmt(verdict.number("I3"), 6) << "); ";
  }
  const auto zero = criteria::obs1_check(states::noisy_ghz(0.0, 4));
  pass = pass && zero.status == Status::consistent;
  os << "V=0: " << criteria::to_string(zero.status);
  return {pass, os.str()};
}

Outcome smolin_ranks() {
  const auto p = criteria::rank_profile_of(states::smolin());
  const bool profile_ok = p == criteria::RankProfile{16, 16, 16, 16, 4, 4, 4, 2};
  const auto f = criteria::rank_feasibility(p);
  const bool exhaustive = f.assignments_examined == f.assignments_total && !f.assignment;
  std::ostringstream os;
  os << "profile (" << p.global_rank << "; " << p.rank_bc << "," << p.rank_ac << "," << p.rank_ab << "; " << p.rank_a
     << "," << p.rank_b << "," << p.rank_c << "), " << criteria::to_string(f.verdict.status) << " after "
     << f.assignments_examined << "/" << f.assignments_total << " assignments";
  return {profile_ok && f.verdict.status == Status::violated && exhaustive, os.str()};
}

Outcome ghz_obs2() {
  const auto v = criteria::obs2_pure_check(states::ghz(4));
  const double e = v.number("E_A|BC");
  const bool sep = v.number("A|BC.separable_AB") == 1.0 && v.number("A|BC.separable_AC") == 1.0;
  return {v.status == Status::violated && std::abs(e - 2.0) < 1e-9 && sep,
          std::string(criteria::to_string(v.status)) + ", E_A|BC=" + fmt(e, 12) + ", marginals separable=" +
              (sep ? "yes" : "no")};
}

Outcome gme_qubit() {
  const auto g = criteria::gme_qubit_check(states::embed(states::ghz(2), {4, 4, 4})).status;
  const auto w = criteria::gme_qubit_check(states::embed(states::w_state(), {4, 4, 4})).status;
  const auto rc = criteria::gme_qubit_check(states::ring_cluster()).status;
  return {g == Status::violated && w == Status::violated && rc == Status::consistent,
          std::string("ghz: ") + criteria::to_string(g) + ", w: " + criteria::to_string(w) +
              ", ring cluster: " + criteria::to_string(rc)};
}

Outcome seesaw_contracts() {
  Rng rng = make_rng(42, 2000);
  seesaw::SeesawConfig cfg;
  cfg.restarts = 4;
  cfg.max_iterations = 200;
  int monotone_fail = 0, determinism_fail = 0, reeval_fail = 0;
  double worst_drop = 0.0, worst_reeval = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PureState target = haar_state(rng, {4, 4, 4});
    cfg.seed = 1000 + i;
    for (int r = 0; r < cfg.restarts; ++r) {
      const auto a = seesaw::run_restart(target, cfg, r);
      const auto b = seesaw::run_restart(target, cfg, r);
      if (a.trace != b.trace || a.mu_squared != b.mu_squared) ++determinism_fail;
      double drop = 0.0;
      for (std::size_t k = 1; k < a.trace.size(); ++k) drop = std::max(drop, a.trace[k - 1] - a.trace[k]);
      worst_drop = std::max(worst_drop, drop);
      if (drop > 1e-12) ++monotone_fail;
    }
    const auto best = seesaw::optimize_overlap(target, cfg);
    const auto again = seesaw::optimize_overlap(target, cfg);
    if (best.trace != again.trace || best.mu_squared != again.mu_squared) ++determinism_fail;
    const double err = std::abs(std::norm(overlap(target, states::itn_state(best.best))) - best.mu_squared);
    worst_reeval = std::max(worst_reeval, err);
    if (err > 1e-10) ++reeval_fail;
  }
  std::ostringstream os;
  os << "monotone failures " << monotone_fail << " (max drop " << fmt(worst_drop, 3) << "), determinism failures "
     << determinism_fail << ", re-evaluation failures " << reeval_fail << " (max error " << fmt(worst_reeval, 3) << ")";
  return {monotone_fail == 0 && determinism_fail == 0 && reeval_fail == 0, os.str()};
}

Outcome tensor_demo() {
  const auto t = tensorrank::matmul_tensor();
  const auto canonical = tensorrank::canonical_terms();
  const auto strassen = tensorrank::strassen_terms();
  const bool full = canonical.size() == 8 && strassen.size() == 7 &&
                    tensorrank::verify_decomposition(t, canonical, 0.0) &&
                    tensorrank::verify_decomposition(t, strassen, 0.0);
  int subsets = 0, verified = 0;
  for (const auto* terms : {&canonical, &strassen}) {
    const int n = static_cast<int>(terms->size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != 6) continue;
      std::vector<tensorrank::ProductTerm> subset;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) subset.push_back((*terms)[i]);
      }
      ++subsets;
      verified += tensorrank::verify_decomposition(t, subset);
    }
  }
  return {full && verified == 0, std::string("8-term and 7-term exact: ") + (full ? "yes" : "no") + "; " +
                                     std::to_string(verified) + " of " + std::to_string(subsets) +
                                     " six-term subsets verify"};
}

Outcome sandwich() {
  bool pass = true;
  std::ostringstream os;
  for (const auto& row : commands::table1_rows()) {
    const double mu2 = seesaw::optimize_overlap(table_target(row.target), table_config()).mu_squared;
    const double b = bounds::overlap_upper_bound(commands::resolve_target(row.target)).value;
    pass = pass && mu2 <= b + 1e-6;
    os << row.target << ": " << fmt(mu2, 6) << " <= " << fmt(b, 6) << "; ";
  }
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria_list = {
      {"table1-reproduction", table1},
      {"ghz2-analytical-bound", ghz2_bound},
      {"tmi-classical-correlations", tmi_exact},
      {"obs1-independent-networks", obs1_generator},
      {"noisy-ghz-obs1", noisy_ghz},
      {"smolin-rank-infeasible", smolin_ranks},
      {"ghz-obs2-exclusion", ghz_obs2},
      {"obs4-qubit-gme", gme_qubit},
      {"seesaw-contracts", seesaw_contracts},
      {"tensor-decompositions", tensor_demo},
      {"bound-seesaw-sandwich", sandwich},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria_list.size(); ++i) {
    Outcome o;
    try {
      o = criteria_list[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria_list[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria_list.size() - failed) << "/" << criteria_list.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
