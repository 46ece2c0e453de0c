#include "hilrank/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hilrank {

namespace {

// Face enumeration expands per-facet power sets; cap the exponent.
constexpr std::size_t kMaxFacetSizeForEnumeration = 30;

void check_label_range(int label, int m) {
  if (label < 1 || label > m) {
    throw std::invalid_argument("vertex label " + std::to_string(label) +
                                " out of range 1.." + std::to_string(m));
  }
}

}  // namespace

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 1) {
    throw std::invalid_argument("vertex labels must be positive, got " +
                                std::to_string(vertices_.front()));
  }
}

bool Face::contains(int vertex) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

bool Face::contains(const Face& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

bool dim_lex_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void validate(const FVector& f) {
  if (f.counts.empty()) throw std::invalid_argument("f-vector must be non-empty");
  if (f.counts[0] != 1) throw std::invalid_argument("f-vector must start with f_{-1} = 1");
  for (const Int& c : f.counts) {
    if (c <= 0) throw std::invalid_argument("f-vector entries must be positive");
  }
}

SimplicialComplex SimplicialComplex::from_facets(
    int vertex_count, const std::vector<std::vector<int>>& facet_candidates) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be at least 1");

  std::set<Face> candidates;
  for (const auto& raw : facet_candidates) {
    Face face(raw);
    for (int v : face.vertices()) check_label_range(v, vertex_count);
    candidates.insert(std::move(face));
  }

  // Keep only maximal candidates.
  std::vector<Face> facets;
  for (const Face& f : candidates) {
    bool contained = false;
    for (const Face& g : candidates) {
      if (!(g == f) && g.contains(f)) {
        contained = true;
        break;
      }
    }
    if (!contained && !f.empty()) facets.push_back(f);
  }

  std::vector<bool> covered(static_cast<std::size_t>(vertex_count) + 1, false);
  for (const Face& f : facets) {
    for (int v : f.vertices()) covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= vertex_count; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(
          "vertex " + std::to_string(v) +
          " is covered by no facet; isolated vertices must be passed as singleton facets");
    }
  }

  return SimplicialComplex(vertex_count, std::move(facets));
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const Face& f : facets_) dim = std::max(dim, f.dimension());
  return dim;
}

bool SimplicialComplex::is_face(const std::vector<int>& vertex_set) const {
  for (int v : vertex_set) check_label_range(v, vertex_count_);
  return is_face(Face(vertex_set));
}

bool SimplicialComplex::is_face(const Face& face) const {
  for (const Face& facet : facets_) {
    if (facet.contains(face)) return true;
  }
  return false;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<std::vector<int>> seen;
  for (const Face& facet : facets_) {
    const auto& verts = facet.vertices();
    const std::size_t n = verts.size();
    if (n > kMaxFacetSizeForEnumeration) {
      throw std::length_error("face enumeration over a facet of " + std::to_string(n) +
                              " vertices is not supported");
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) subset.push_back(verts[i]);
      }
      seen.insert(std::move(subset));
    }
  }

  std::vector<Face> result;
  result.reserve(seen.size());
  for (const auto& verts : seen) result.emplace_back(Face(verts));
  std::sort(result.begin(), result.end(), dim_lex_less);
  return result;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(dimension()) + 2, 0);
  for (const Face& face : faces()) {
    f.counts[static_cast<std::size_t>(face.dimension() + 1)] += 1;
  }
  validate(f);
  return f;
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
  // N is a minimal non-face iff N is not a face and every one-vertex
  // deletion is. Every such N is some face plus one vertex, so extending
  // each face by each absent vertex enumerates all candidates.
  std::set<std::vector<int>> found;
  for (const Face& face : faces()) {
    for (int v = 1; v <= vertex_count_; ++v) {
      if (face.contains(v)) continue;
      std::vector<int> candidate = face.vertices();
      candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), v), v);
      Face cand(candidate);
      if (is_face(cand)) continue;
      bool minimal = true;
      for (std::size_t skip = 0; skip < candidate.size() && minimal; ++skip) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
          if (i != skip) sub.push_back(candidate[i]);
        }
        if (!is_face(Face(sub))) minimal = false;
      }
      if (minimal) found.insert(candidate);
    }
  }

  std::vector<Face> result;
  result.reserve(found.size());
  for (const auto& verts : found) result.emplace_back(Face(verts));
  std::sort(result.begin(), result.end(), dim_lex_less);
  return result;
}

}  // namespace hilrank
