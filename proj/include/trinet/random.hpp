#pragma once

#include <cstdint>
#include <random>

#include "trinet/linalg.hpp"

namespace trinet {

using Rng = std::mt19937_64;

// Independent stream for (seed, stream) pairs, e.g. one per see-saw restart.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Vector complex_gaussian(Rng& rng, int n);
Matrix complex_gaussian(Rng& rng, int rows, int cols);

/// Haar-random pure state: normalized complex-Gaussian vector.
PureState haar_state(Rng& rng, const Dims& dims);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal moved into Q.
UnitaryOp haar_unitary(Rng& rng, int dim);

/// Random mixed state G G^dagger / tr(G G^dagger) with G of shape dim x rank.
DensityState random_density(Rng& rng, const Dims& dims, int rank);

}  // namespace trinet
