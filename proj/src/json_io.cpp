#include "hilrank/json_io.hpp"

#include <stdexcept>

namespace hilrank {

namespace {

std::vector<std::vector<int>> facet_lists_from_json(const nlohmann::json& facets) {
  if (!facets.is_array()) throw std::invalid_argument("\"facets\" must be an array of arrays");
  std::vector<std::vector<int>> lists;
  for (const auto& entry : facets) {
    if (!entry.is_array()) throw std::invalid_argument("\"facets\" must be an array of arrays");
    std::vector<int> verts;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("facet vertex labels must be integers");
      }
      verts.push_back(v.get<int>());
    }
    lists.push_back(std::move(verts));
  }
  return lists;
}

}  // namespace

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("complex description must be a JSON object");
  if (!j.contains("m") || !j["m"].is_number_integer()) {
    throw std::invalid_argument("complex description needs an integer \"m\"");
  }
  if (!j.contains("facets")) {
    throw std::invalid_argument("complex description needs a \"facets\" array");
  }
  return SimplicialComplex::from_facets(j["m"].get<int>(), facet_lists_from_json(j["facets"]));
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Face& f : c.facets()) facets.push_back(f.vertices());
  return nlohmann::json{{"m", c.vertex_count()}, {"facets", facets}};
}

std::optional<std::vector<int>> levels_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("levels") || j["levels"].is_null()) return std::nullopt;
  if (!j["levels"].is_array()) throw std::invalid_argument("\"levels\" must be an array or null");
  std::vector<int> levels;
  for (const auto& v : j["levels"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("levels must be integers");
    levels.push_back(v.get<int>());
  }
  return levels;
}

nlohmann::json model_to_json(const ModelSpec& spec) {
  nlohmann::json j = complex_to_json(spec.complex);
  j["levels"] = spec.levels;
  return j;
}

nlohmann::json int_to_json(const Int& v) {
  static const Int kJsonSafe = Int(1) << 53;
  if (v <= kJsonSafe && v >= -kJsonSafe) {
    return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  }
  return nlohmann::json(v.get_str());
}

nlohmann::json fvector_to_json(const FVector& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : f.counts) arr.push_back(int_to_json(c));
  return arr;
}

nlohmann::json evector_to_json(const EVector& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : e.coeffs) arr.push_back(int_to_json(c));
  return arr;
}

nlohmann::json report_to_json(const RankReport& report) {
  nlohmann::json j;
  j["rank"] = int_to_json(report.rank);
  j["model_dimension"] = int_to_json(report.model_dimension);
  j["degrees_of_freedom"] = int_to_json(report.degrees_of_freedom);
  j["method"] = to_string(report.method);
  nlohmann::json checks = nlohmann::json::array();
  for (RankMethod m : report.cross_checks) checks.push_back(to_string(m));
  j["cross_checks"] = checks;
  j["ds_model"] = report.ds_model;
  j["oracle_checked"] = report.oracle_checked;
  if (report.oracle_rank) {
    j["oracle_rank"] = int_to_json(*report.oracle_rank);
    j["agree"] = report.oracle_agrees;
  }
  return j;
}

}  // namespace hilrank
