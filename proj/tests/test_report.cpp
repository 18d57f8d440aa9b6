#include <doctest.h>

#include <cmath>
#include <limits>

#include "trinet/report.hpp"

using namespace trinet;
using criteria::Status;

namespace {

Report sample() {
  Report r;
  r.seed = 1234567890123ULL;
  r.input = ojson{{"path", "state.json"}, {"dims", {4, 4, 4}}};
  r.criteria.emplace_back("obs1", criteria::make_verdict(Status::violated, "I3 = 1", {{"I3", 1.0000000000000002}}));
  r.criteria.emplace_back("rank", criteria::make_verdict(Status::consistent, "ok", {{"x", 0.1}, {"y", -3e-300}}));
  r.criteria.emplace_back("obs2", criteria::make_verdict(Status::inconclusive, "", {}));
  r.payload = ojson{{"mu_squared", 0.53333333333333333}, {"rows", {1, 2, 3}}, {"label", "putative"}};
  return r;
}

}  // namespace

TEST_CASE("report round trip is lossless") {
  const Report r = sample();
  const Report back = report_from_json(ojson::parse(report_to_json(r).dump()));
  CHECK(back == r);
  CHECK(back.any_violated());
}

TEST_CASE("non-finite numbers survive the round trip") {
  Report r = sample();
  r.criteria.emplace_back("odd", criteria::make_verdict(Status::consistent, "",
                                                        {{"inf", std::numeric_limits<double>::infinity()},
                                                         {"nan", std::numeric_limits<double>::quiet_NaN()}}));
  const Report back = report_from_json(ojson::parse(report_to_json(r).dump()));
  CHECK(back == r);
  CHECK(std::isinf(back.criteria.back().second.number("inf")));
  CHECK(std::isnan(back.criteria.back().second.number("nan")));
}

TEST_CASE("report json layout") {
  const ojson j = report_to_json(sample());
  CHECK(j["tool"] == "trinet");
  CHECK(j["seed"] == 1234567890123ULL);
  CHECK(j["criteria"][0]["name"] == "obs1");
  CHECK(j["criteria"][0]["status"] == "violated");
  CHECK(j["criteria"][0]["numbers"][0]["name"] == "I3");
}

TEST_CASE("summary mentions every criterion") {
  const std::string s = report_summary(sample());
  for (const char* name : {"obs1: violated", "rank: consistent", "obs2: inconclusive", "mu_squared"}) {
    CHECK(s.find(name) != std::string::npos);
  }
}

TEST_CASE("malformed reports are rejected") {
  ojson j = report_to_json(sample());
  j["criteria"][0]["status"] = "unknown";
  CHECK_THROWS(report_from_json(j));
  j = report_to_json(sample());
  j.erase("tool");
  CHECK_THROWS(report_from_json(j));
}
