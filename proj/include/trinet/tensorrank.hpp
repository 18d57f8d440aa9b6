#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinet/linalg.hpp"

namespace trinet::tensorrank {

/// Order-3 tensor, row-major over (i, j, k).
struct Tensor3 {
  std::array<int, 3> dims{};
  std::vector<cplx> data;

  Tensor3() = default;
  explicit Tensor3(std::array<int, 3> dims);

  cplx& operator()(int i, int j, int k) { return data[(i * dims[1] + j) * dims[2] + k]; }
  const cplx& operator()(int i, int j, int k) const { return data[(i * dims[1] + j) * dims[2] + k]; }
};

/// coefficient * (legs[0] x legs[1] x legs[2])
struct ProductTerm {
  cplx coefficient{1.0, 0.0};
  std::array<Vector, 3> legs;
};

/// 2x2 matrix-multiplication tensor: ones at (2i+j, 2j+k, 2k+i).
Tensor3 matmul_tensor();

/// The eight basis-product terms of matmul_tensor().
std::vector<ProductTerm> canonical_terms();

/// Strassen's seven-term decomposition of matmul_tensor(). Leg vectors index
/// 2x2 matrices row-major; the third leg is indexed by (k, i) for entry C_ik.
std::vector<ProductTerm> strassen_terms();

Tensor3 reconstruct(const std::array<int, 3>& dims, const std::vector<ProductTerm>& terms);

/// True iff the terms sum to `t` entrywise within `tol`.
bool verify_decomposition(const Tensor3& t, const std::vector<ProductTerm>& terms, double tol = 1e-10);

/// The tensor's entries, normalized, as a pure state on dims [d0, d1, d2].
PureState as_network_state(const Tensor3& t);

// {"dims": [4, 4, 4], "data": [[re, im], ...]}
nlohmann::json tensor_to_json(const Tensor3& t);
Tensor3 tensor_from_json(const nlohmann::json& j);

// {"terms": [{"coefficient": [re, im], "legs": [[[re, im], ...], [...], [...]]}, ...]}
nlohmann::json terms_to_json(const std::vector<ProductTerm>& terms);
std::vector<ProductTerm> terms_from_json(const nlohmann::json& j);

}  // namespace trinet::tensorrank
