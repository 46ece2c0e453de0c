#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilrank/bigint.hpp"
#include "hilrank/errors.hpp"
#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// A hierarchical model: a complex plus per-variable level counts r_1..r_m.
struct ModelSpec {
  SimplicialComplex complex;
  std::vector<int> levels;

  /// Validates levels.size() == m and every level >= 1.
  static ModelSpec make(SimplicialComplex complex, std::vector<int> levels);

  /// Number of joint cells, prod r_i.
  Int joint_cells() const;
  /// The common level when all levels are equal, nullopt otherwise.
  std::optional<int> constant_level() const;
};

inline constexpr std::size_t kDefaultColumnCap = std::size_t{1} << 20;

/// The 0/1 matrix of sufficient statistics: one row per (facet, marginal
/// cell), one column per joint cell. Row blocks follow the canonical facet
/// order; within a block, marginal cells are lexicographic with the last
/// coordinate varying fastest, and columns order joint cells the same way.
struct DesignMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Row-major 0/1 entries.
  std::vector<std::uint8_t> entries;

  /// Row labels: (facet index into the complex's facet list, marginal cell).
  struct RowKey {
    std::size_t facet_index;
    std::vector<int> marginal_cell;
  };
  std::vector<RowKey> row_index;
  /// Column labels: joint cells i in prod [r_i], 1-based coordinates.
  std::vector<std::vector<int>> col_index;

  std::uint8_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  /// Bit-exact text form: first line "rows cols", then one line per row of
  /// space-separated 0/1 entries.
  std::string dump() const;
};

/// Builds A_Gamma for the given model. Throws size_cap_error when the
/// column count prod r_i exceeds column_cap.
DesignMatrix build_design_matrix(const ModelSpec& spec,
                                 std::size_t column_cap = kDefaultColumnCap);

/// Exact rank over the rationals. Fraction-free (Bareiss) elimination with
/// pivoting by first nonzero, in exact integer arithmetic; very
/// rectangular inputs are first condensed to an exact Gram matrix over the
/// shorter side (rank-preserving over Q). A modular-arithmetic rank at a
/// word-sized prime runs alongside as a cross-check; disagreement throws
/// inconsistency_error. Deterministic.
int exact_rank(const DesignMatrix& mat);

/// Formula-vs-matrix comparison for one model.
struct VerifyOutcome {
  Int formula_rank;
  std::optional<Int> oracle_rank;  ///< nullopt when the matrix exceeded the cap
  bool agree = false;              ///< oracle present and equal to the formula

  bool oracle_checked() const { return oracle_rank.has_value(); }
};

/// Computes the formula rank, builds the matrix and compares with
/// exact_rank. A size-cap overflow downgrades to formula-only with
/// oracle_rank empty.
VerifyOutcome verify_spec(const ModelSpec& spec, std::size_t column_cap = kDefaultColumnCap);

}  // namespace hilrank
