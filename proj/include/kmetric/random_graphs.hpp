#pragma once

#include <random>

#include "kmetric/constructions.hpp"

namespace kmetric {

// Random connected graph on n vertices: a random spanning tree plus each
// remaining pair independently with probability p drawn from [0.2, 0.8].
// Deterministic for a given rng state.
Graph random_connected_graph(int n, std::mt19937_64& rng);

// Random corona instance: connected base of order 2..base_max and one random
// connected attachment of order 2..attach_max per base vertex.
CoronaSpec random_corona_spec(std::mt19937_64& rng, int base_max,
                              int attach_max);

}  // namespace kmetric
