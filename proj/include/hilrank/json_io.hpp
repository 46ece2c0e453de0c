#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "hilrank/bigint.hpp"
#include "hilrank/design_matrix.hpp"
#include "hilrank/rank.hpp"
#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// Canonical JSON schema for a complex: {"m": 4, "facets": [[1,2],...]}.
/// A model description adds "levels": [int,...] | null. Facet lists are
/// accepted in any order; emission is always canonical.

SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

/// Levels from the "levels" key; nullopt when absent or null.
std::optional<std::vector<int>> levels_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const ModelSpec& spec);

/// Big integers become JSON numbers when |v| <= 2^53, decimal strings
/// beyond, so downstream consumers never lose precision silently.
nlohmann::json int_to_json(const Int& v);

nlohmann::json fvector_to_json(const FVector& f);
nlohmann::json evector_to_json(const EVector& e);
nlohmann::json report_to_json(const RankReport& report);

}  // namespace hilrank
