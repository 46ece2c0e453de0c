#pragma once

#include <vector>

#include "hilrank/bigint.hpp"

namespace hilrank {

/// A face of a simplicial complex: a sorted, duplicate-free set of vertex
/// labels in 1..m. The empty face has dimension -1.
class Face {
 public:
  Face() = default;
  /// Canonicalizes: sorts and removes duplicate labels. Labels must be
  /// positive; range checks against m happen at the owning complex.
  explicit Face(std::vector<int> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<int>& vertices() const { return vertices_; }

  bool contains(int vertex) const;
  /// Subset test: every vertex of `other` is a vertex of this face.
  bool contains(const Face& other) const;

  bool operator==(const Face& other) const { return vertices_ == other.vertices_; }
  /// Lexicographic order on the vertex sequence.
  bool operator<(const Face& other) const { return vertices_ < other.vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Order faces by (dimension, lexicographic). Used for face listings.
bool dim_lex_less(const Face& a, const Face& b);

/// Face-count vector (f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1 lives at
/// index 0, so counts[i] = f_{i-1}.
struct FVector {
  std::vector<Int> counts;

  /// dim + 1 in the usual convention; the vector has d + 1 entries.
  int d() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector& other) const = default;
};

/// Validates the FVector invariants: f_{-1} = 1 and every entry positive.
/// Throws std::invalid_argument on violation.
void validate(const FVector& f);

/// An abstract simplicial complex on vertices 1..m, stored by its facet
/// list (maximal faces, sorted lexicographically). Immutable once built;
/// every vertex must appear in some facet.
class SimplicialComplex {
 public:
  /// Canonicalizes facet candidates: deduplicates labels and candidates,
  /// drops candidates contained in another, sorts. Throws
  /// std::invalid_argument if m < 1, a label is out of 1..m, or some
  /// vertex is covered by no candidate (isolated vertices must be passed
  /// as singleton facets).
  static SimplicialComplex from_facets(int vertex_count,
                                       const std::vector<std::vector<int>>& facet_candidates);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  /// Dimension of the largest face. At least 0, since every vertex is covered.
  int dimension() const;

  /// True iff the given set is contained in some facet. Labels are
  /// range-checked; duplicates are tolerated (it is a set).
  bool is_face(const std::vector<int>& vertex_set) const;
  /// Same test for an already-canonical face, label checks skipped.
  bool is_face(const Face& face) const;

  /// Full downward closure including the empty face, sorted by
  /// (dimension, lex). Exponential in facet size; guarded at desk scale.
  std::vector<Face> faces() const;

  FVector f_vector() const;

  /// Inclusion-minimal subsets of [m] that are not faces, sorted by
  /// (dimension, lex). Empty exactly when the complex is the full simplex.
  std::vector<Face> minimal_nonfaces() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex(int vertex_count, std::vector<Face> facets)
      : vertex_count_(vertex_count), facets_(std::move(facets)) {}

  int vertex_count_ = 0;
  std::vector<Face> facets_;
};

}  // namespace hilrank
