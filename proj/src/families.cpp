#include "hilrank/families.hpp"

#include <numeric>
#include <stdexcept>

namespace hilrank {

SimplicialComplex cyclic_complex(int m) {
  if (m < 3) throw std::invalid_argument("cyclic complex requires m >= 3");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
  edges.push_back({m, 1});
  return SimplicialComplex::from_facets(m, edges);
}

SimplicialComplex main_effect_complex(int m) {
  if (m < 1) throw std::invalid_argument("main-effect complex requires m >= 1");
  std::vector<std::vector<int>> singletons;
  for (int i = 1; i <= m; ++i) singletons.push_back({i});
  return SimplicialComplex::from_facets(m, singletons);
}

SimplicialComplex saturated_complex(int m) {
  if (m < 1) throw std::invalid_argument("saturated complex requires m >= 1");
  std::vector<int> top(static_cast<std::size_t>(m));
  std::iota(top.begin(), top.end(), 1);
  return SimplicialComplex::from_facets(m, {top});
}

SimplicialComplex simplex_boundary_complex(int m) {
  if (m < 2) throw std::invalid_argument("simplex boundary requires m >= 2");
  std::vector<std::vector<int>> facets;
  for (int skip = 1; skip <= m; ++skip) {
    std::vector<int> facet;
    for (int v = 1; v <= m; ++v) {
      if (v != skip) facet.push_back(v);
    }
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(m, facets);
}

}  // namespace hilrank
