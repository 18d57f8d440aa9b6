#include "trinet/state_io.hpp"

#include <fstream>
#include <sstream>

namespace trinet {

using nlohmann::json;

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvariantError("state file: each data entry must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json state_to_json(const AnyState& s) {
  json out;
  if (const auto* p = std::get_if<PureState>(&s)) {
    out["dims"] = p->dims();
    out["kind"] = "pure";
    json data = json::array();
    for (Eigen::Index i = 0; i < p->amplitudes().size(); ++i) data.push_back(complex_to_json(p->amplitudes()(i)));
    out["data"] = std::move(data);
  } else {
    const auto& d = std::get<DensityState>(s);
    out["dims"] = d.dims();
    out["kind"] = "mixed";
    json data = json::array();
    for (int i = 0; i < d.dim(); ++i) {
      for (int k = 0; k < d.dim(); ++k) data.push_back(complex_to_json(d.matrix()(i, k)));
    }
    out["data"] = std::move(data);
  }
  return out;
}

AnyState state_from_json(const json& j) {
  if (!j.is_object()) throw InvariantError("state file: top level must be a JSON object");
  for (const char* key : {"dims", "kind", "data"}) {
    if (!j.contains(key)) throw InvariantError(std::string("state file: missing required field '") + key + "'");
  }
  if (!j["dims"].is_array()) throw InvariantError("state file: 'dims' must be an array of positive integers");
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer()) throw InvariantError("state file: 'dims' must be an array of positive integers");
    dims.push_back(d.get<int>());
  }
  for (int d : dims) {
    if (d <= 0) throw InvariantError("state file: subsystem dimensions must be positive");
  }
  const int n = total_dim(dims);
  if (n > kMaxTotalDim) {
    throw InvariantError("state file: total dimension exceeds the supported maximum 4096");
  }
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const json& data = j["data"];
  if (!data.is_array()) throw InvariantError("state file: 'data' must be an array of [re, im] pairs");

  if (kind == "pure") {
    if (static_cast<int>(data.size()) != n) {
      std::ostringstream os;
      os << "state file: pure data length " << data.size() << " must equal the product of dims " << n;
      throw InvariantError(os.str());
    }
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_from_json(data[i]);
    return PureState(std::move(v), std::move(dims));
  }
  if (kind == "mixed") {
    if (static_cast<long long>(data.size()) != static_cast<long long>(n) * n) {
      std::ostringstream os;
      os << "state file: mixed data length " << data.size() << " must equal (product of dims)^2 = " << n * n;
      throw InvariantError(os.str());
    }
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(data[i * n + k]);
    }
    return DensityState(std::move(m), std::move(dims));
  }
  throw InvariantError("state file: 'kind' must be \"pure\" or \"mixed\"");
}

void save_state(const std::string& path, const AnyState& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << state_to_json(s).dump() << '\n';
}

AnyState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvariantError(std::string("state file: not valid JSON (") + e.what() + ")");
  }
  return state_from_json(j);
}

DensityState as_density(const AnyState& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return DensityState(*p);
  return std::get<DensityState>(s);
}

}  // namespace trinet
