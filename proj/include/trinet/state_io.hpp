#pragma once

#include <string>

#include <json.hpp>

#include "trinet/linalg.hpp"

namespace trinet {

// State file format:
//   {"dims": [d1, ..., dn], "kind": "pure" | "mixed", "data": [[re, im], ...]}
// Pure data is the amplitude vector; mixed data is the row-major matrix.
nlohmann::json state_to_json(const AnyState& s);
AnyState state_from_json(const nlohmann::json& j);

void save_state(const std::string& path, const AnyState& s);
AnyState load_state(const std::string& path);

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

// Mixed view of either kind.
DensityState as_density(const AnyState& s);

}  // namespace trinet
