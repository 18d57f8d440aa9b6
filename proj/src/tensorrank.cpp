#include "trinet/tensorrank.hpp"

#include <cmath>
#include <stdexcept>

#include "trinet/state_io.hpp"

namespace trinet::tensorrank {

using nlohmann::json;

namespace {

// Unit-coefficient combination of 2x2 matrix units E_rc, flattened as 2r+c.
Vector matrix_units(std::initializer_list<std::pair<std::array<int, 2>, double>> entries) {
  Vector v = Vector::Zero(4);
  for (const auto& [rc, s] : entries) v(2 * rc[0] + rc[1]) += s;
  return v;
}

// Third-leg vector for a product M_r: entry 2k+i holds M_r's coefficient in C_ik.
Vector output_leg(std::initializer_list<std::pair<std::array<int, 2>, double>> c_entries) {
  Vector v = Vector::Zero(4);
  for (const auto& [ik, s] : c_entries) v(2 * ik[1] + ik[0]) += s;
  return v;
}

}  // namespace

Tensor3::Tensor3(std::array<int, 3> d) : dims(d), data(static_cast<std::size_t>(d[0]) * d[1] * d[2], cplx(0.0)) {
  for (int x : d) {
    if (x <= 0) throw std::invalid_argument("Tensor3: dimensions must be positive");
  }
}

Tensor3 matmul_tensor() {
  Tensor3 t({4, 4, 4});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) t(2 * i + j, 2 * j + k, 2 * k + i) = 1.0;
    }
  }
  return t;
}

std::vector<ProductTerm> canonical_terms() {
  std::vector<ProductTerm> terms;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        ProductTerm p;
        p.legs = {Vector::Unit(4, 2 * i + j), Vector::Unit(4, 2 * j + k), Vector::Unit(4, 2 * k + i)};
        terms.push_back(std::move(p));
      }
    }
  }
  return terms;
}

std::vector<ProductTerm> strassen_terms() {
  using E = std::array<int, 2>;
  const E a11{0, 0}, a12{0, 1}, a21{1, 0}, a22{1, 1};
  // M1..M7 with C11 = M1+M4-M5+M7, C12 = M3+M5, C21 = M2+M4, C22 = M1-M2+M3+M6.
  std::vector<ProductTerm> t(7);
  t[0].legs = {matrix_units({{a11, 1}, {a22, 1}}), matrix_units({{a11, 1}, {a22, 1}}),
               output_leg({{a11, 1}, {a22, 1}})};
  t[1].legs = {matrix_units({{a21, 1}, {a22, 1}}), matrix_units({{a11, 1}}), output_leg({{a21, 1}, {a22, -1}})};
  t[2].legs = {matrix_units({{a11, 1}}), matrix_units({{a12, 1}, {a22, -1}}), output_leg({{a12, 1}, {a22, 1}})};
  t[3].legs = {matrix_units({{a22, 1}}), matrix_units({{a21, 1}, {a11, -1}}), output_leg({{a11, 1}, {a21, 1}})};
  t[4].legs = {matrix_units({{a11, 1}, {a12, 1}}), matrix_units({{a22, 1}}), output_leg({{a11, -1}, {a12, 1}})};
  t[5].legs = {matrix_units({{a21, 1}, {a11, -1}}), matrix_units({{a11, 1}, {a12, 1}}), output_leg({{a22, 1}})};
  t[6].legs = {matrix_units({{a12, 1}, {a22, -1}}), matrix_units({{a21, 1}, {a22, 1}}), output_leg({{a11, 1}})};
  return t;
}

Tensor3 reconstruct(const std::array<int, 3>& dims, const std::vector<ProductTerm>& terms) {
  Tensor3 out(dims);
  for (const auto& p : terms) {
    for (int leg = 0; leg < 3; ++leg) {
      if (p.legs[leg].size() != dims[leg]) {
        throw std::invalid_argument("verify_decomposition: term leg dimension does not match the tensor");
      }
    }
    for (int i = 0; i < dims[0]; ++i) {
      const cplx xi = p.coefficient * p.legs[0](i);
      if (xi == cplx(0.0)) continue;
      for (int j = 0; j < dims[1]; ++j) {
        const cplx xij = xi * p.legs[1](j);
        if (xij == cplx(0.0)) continue;
        for (int k = 0; k < dims[2]; ++k) out(i, j, k) += xij * p.legs[2](k);
      }
    }
  }
  return out;
}

bool verify_decomposition(const Tensor3& t, const std::vector<ProductTerm>& terms, double tol) {
  const Tensor3 r = reconstruct(t.dims, terms);
  for (std::size_t n = 0; n < t.data.size(); ++n) {
    if (std::abs(r.data[n] - t.data[n]) > tol) return false;
  }
  return true;
}

PureState as_network_state(const Tensor3& t) {
  Vector v(static_cast<Eigen::Index>(t.data.size()));
  for (std::size_t n = 0; n < t.data.size(); ++n) v(static_cast<Eigen::Index>(n)) = t.data[n];
  if (v.norm() == 0.0) throw std::invalid_argument("as_network_state: zero tensor");
  return PureState::normalized(std::move(v), {t.dims[0], t.dims[1], t.dims[2]});
}

json tensor_to_json(const Tensor3& t) {
  json data = json::array();
  for (const auto& z : t.data) data.push_back(complex_to_json(z));
  return json{{"dims", t.dims}, {"data", std::move(data)}};
}

Tensor3 tensor_from_json(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3) {
    throw std::invalid_argument("tensor file: 'dims' must list three leg dimensions");
  }
  Tensor3 t({j["dims"][0].get<int>(), j["dims"][1].get<int>(), j["dims"][2].get<int>()});
  if (!j.contains("data") || j["data"].size() != t.data.size()) {
    throw std::invalid_argument("tensor file: 'data' length must equal the product of dims");
  }
  for (std::size_t n = 0; n < t.data.size(); ++n) t.data[n] = complex_from_json(j["data"][n]);
  return t;
}

json terms_to_json(const std::vector<ProductTerm>& terms) {
  json arr = json::array();
  for (const auto& p : terms) {
    json legs = json::array();
    for (const auto& leg : p.legs) {
      json v = json::array();
      for (Eigen::Index i = 0; i < leg.size(); ++i) v.push_back(complex_to_json(leg(i)));
      legs.push_back(std::move(v));
    }
    arr.push_back(json{{"coefficient", complex_to_json(p.coefficient)}, {"legs", std::move(legs)}});
  }
  return json{{"terms", std::move(arr)}};
}

std::vector<ProductTerm> terms_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("terms");
  std::vector<ProductTerm> terms;
  for (const auto& item : arr) {
    ProductTerm p;
    const json& legs = item.is_array() ? item : item.at("legs");
    if (!item.is_array() && item.contains("coefficient")) p.coefficient = complex_from_json(item["coefficient"]);
    if (legs.size() != 3) throw std::invalid_argument("decomposition file: each term needs three leg vectors");
    for (int leg = 0; leg < 3; ++leg) {
      Vector v(static_cast<Eigen::Index>(legs[leg].size()));
      for (std::size_t i = 0; i < legs[leg].size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(legs[leg][i]);
      if (v.norm() == 0.0) throw std::invalid_argument("decomposition file: leg vectors must be nonzero");
      p.legs[leg] = std::move(v);
    }
    terms.push_back(std::move(p));
  }
  return terms;
}

}  // namespace trinet::tensorrank
