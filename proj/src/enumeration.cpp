#include "hilrank/enumeration.hpp"

#include <cstdint>
#include <stdexcept>

namespace hilrank {

namespace {

std::vector<int> mask_to_vertices(std::uint32_t mask, int m) {
  std::vector<int> verts;
  for (int v = 0; v < m; ++v) {
    if (mask & (std::uint32_t{1} << v)) verts.push_back(v + 1);
  }
  return verts;
}

}  // namespace

std::vector<SimplicialComplex> all_complexes(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (m > 4) throw std::invalid_argument("exhaustive enumeration is guarded to m <= 4");

  // Candidate faces of size >= 2, as bitmasks over [m]; singletons and the
  // empty face belong to every complex.
  std::vector<std::uint32_t> slots;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (__builtin_popcount(mask) >= 2) slots.push_back(mask);
  }

  std::vector<SimplicialComplex> result;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << slots.size()); ++pick) {
    // Downward closure: each chosen face needs all its size >= 2 subsets chosen.
    bool closed = true;
    for (std::size_t s = 0; s < slots.size() && closed; ++s) {
      if (!(pick & (std::uint32_t{1} << s))) continue;
      for (std::size_t t = 0; t < slots.size() && closed; ++t) {
        if ((slots[t] & slots[s]) == slots[t] && !(pick & (std::uint32_t{1} << t))) {
          closed = false;
        }
      }
    }
    if (!closed) continue;

    std::vector<std::vector<int>> candidates;
    for (int v = 1; v <= m; ++v) candidates.push_back({v});
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (pick & (std::uint32_t{1} << s)) candidates.push_back(mask_to_vertices(slots[s], m));
    }
    result.push_back(SimplicialComplex::from_facets(m, candidates));
  }
  return result;
}

SimplicialComplex random_complex(int m, std::mt19937_64& rng) {
  if (m < 1 || m > 32) throw std::invalid_argument("random complex requires 1 <= m <= 32");
  std::vector<std::vector<int>> candidates;
  for (int v = 1; v <= m; ++v) candidates.push_back({v});
  const std::size_t extra = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(m + 1));
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<int> face;
    for (int v = 1; v <= m; ++v) {
      if (rng() & 1) face.push_back(v);
    }
    if (!face.empty()) candidates.push_back(std::move(face));
  }
  return SimplicialComplex::from_facets(m, candidates);
}

std::vector<int> random_levels(int m, const std::vector<int>& level_choices,
                               std::mt19937_64& rng) {
  if (level_choices.empty()) throw std::invalid_argument("level choices must be non-empty");
  std::vector<int> levels;
  levels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    levels.push_back(level_choices[rng() % level_choices.size()]);
  }
  return levels;
}

}  // namespace hilrank
