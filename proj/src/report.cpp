#include "trinet/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trinet {

namespace {

// Non-finite doubles are encoded as the strings "nan", "inf", "-inf".
ojson number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const ojson& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("report: verdict numbers must be numeric");
}

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

bool same_verdict(const criteria::Verdict& a, const criteria::Verdict& b) {
  if (a.status != b.status || a.detail != b.detail || a.numbers.size() != b.numbers.size()) return false;
  for (std::size_t i = 0; i < a.numbers.size(); ++i) {
    if (a.numbers[i].first != b.numbers[i].first || !same_number(a.numbers[i].second, b.numbers[i].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool Report::any_violated() const {
  for (const auto& [name, v] : criteria) {
    if (v.status == criteria::Status::violated) return true;
  }
  return false;
}

bool Report::operator==(const Report& o) const {
  if (tool != o.tool || version != o.version || seed != o.seed || input != o.input || payload != o.payload ||
      criteria.size() != o.criteria.size()) {
    return false;
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (criteria[i].first != o.criteria[i].first || !same_verdict(criteria[i].second, o.criteria[i].second)) {
      return false;
    }
  }
  return true;
}

ojson verdict_to_json(const criteria::Verdict& v) {
  ojson numbers = ojson::array();
  for (const auto& [name, x] : v.numbers) numbers.push_back(ojson{{"name", name}, {"value", number_to_json(x)}});
  return ojson{{"status", criteria::to_string(v.status)}, {"detail", v.detail}, {"numbers", std::move(numbers)}};
}

criteria::Verdict verdict_from_json(const ojson& j) {
  criteria::Verdict v;
  v.status = criteria::status_from_string(j.at("status").get<std::string>());
  v.detail = j.value("detail", "");
  if (j.contains("numbers")) {
    for (const auto& n : j["numbers"]) v.numbers.emplace_back(n.at("name").get<std::string>(), number_from_json(n.at("value")));
  }
  return v;
}

ojson report_to_json(const Report& r) {
  ojson crit = ojson::array();
  for (const auto& [name, v] : r.criteria) {
    ojson item{{"name", name}};
    item.update(verdict_to_json(v));
    crit.push_back(std::move(item));
  }
  return ojson{{"tool", r.tool},       {"version", r.version},       {"seed", r.seed},
               {"input", r.input},     {"criteria", std::move(crit)}, {"payload", r.payload}};
}

Report report_from_json(const ojson& j) {
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.input = j.value("input", ojson::object());
  for (const auto& c : j.at("criteria")) r.criteria.emplace_back(c.at("name").get<std::string>(), verdict_from_json(c));
  r.payload = j.value("payload", ojson::object());
  return r;
}

std::string report_summary(const Report& r) {
  std::ostringstream os;
  os.precision(10);
  os << r.tool << " " << r.version << " (seed " << r.seed << ")\n";
  for (const auto& [name, v] : r.criteria) {
    os << "  " << name << ": " << criteria::to_string(v.status);
    if (!v.detail.empty()) os << " - " << v.detail;
    os << "\n";
    for (const auto& [k, x] : v.numbers) os << "      " << k << " = " << x << "\n";
  }
  for (const auto& [key, value] : r.payload.items()) {
    if (value.is_primitive()) os << "  " << key << " = " << value.dump() << "\n";
  }
  return os.str();
}

}  // namespace trinet
