#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// Every simplicial complex on [m] that contains all singletons, in a
/// deterministic order. Exhaustive-sweep helper; guarded to m <= 4
/// (throws std::invalid_argument beyond).
std::vector<SimplicialComplex> all_complexes(int m);

/// Seeded random complex on [m]: random candidate facets plus all
/// singletons, canonicalized. Deterministic for a given engine state.
SimplicialComplex random_complex(int m, std::mt19937_64& rng);

/// Seeded random level vector with entries drawn from level_choices.
std::vector<int> random_levels(int m, const std::vector<int>& level_choices,
                               std::mt19937_64& rng);

}  // namespace hilrank
