#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trinet/criteria.hpp"

namespace trinet {

inline constexpr const char* kToolName = "trinet";
inline constexpr const char* kToolVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

struct Report {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::uint64_t seed = 42;
  ojson input = ojson::object();
  std::vector<std::pair<std::string, criteria::Verdict>> criteria;
  ojson payload = ojson::object();

  bool any_violated() const;
  bool operator==(const Report& other) const;
};

ojson verdict_to_json(const criteria::Verdict& v);
criteria::Verdict verdict_from_json(const ojson& j);

ojson report_to_json(const Report& r);
Report report_from_json(const ojson& j);

/// Plain-text, one line per criterion plus the scalar payload entries.
std::string report_summary(const Report& r);

}  // namespace trinet
