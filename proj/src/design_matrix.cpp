#include "hilrank/design_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bareiss.hpp"
#include "hilrank/exp_hilbert.hpp"

namespace hilrank {

ModelSpec ModelSpec::make(SimplicialComplex complex, std::vector<int> levels) {
  if (static_cast<int>(levels.size()) != complex.vertex_count()) {
    throw std::invalid_argument("levels length " + std::to_string(levels.size()) +
                                " does not match vertex count " +
                                std::to_string(complex.vertex_count()));
  }
  for (int r : levels) {
    if (r < 1) throw std::invalid_argument("levels must be at least 1");
  }
  return ModelSpec{std::move(complex), std::move(levels)};
}

Int ModelSpec::joint_cells() const {
  Int n = 1;
  for (int r : levels) n *= r;
  return n;
}

std::optional<int> ModelSpec::constant_level() const {
  if (levels.empty()) return std::nullopt;
  for (int r : levels) {
    if (r != levels.front()) return std::nullopt;
  }
  return levels.front();
}

std::string DesignMatrix::dump() const {
  std::string out = std::to_string(rows) + " " + std::to_string(cols) + "\n";
  out.reserve(out.size() + rows * (2 * cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out.push_back(' ');
      out.push_back(entries[r * cols + c] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

// Odometer step over 1-based cells with the last coordinate fastest, which
// is exactly ascending lexicographic order. Returns false after the last cell.
bool next_cell(std::vector<int>& cell, const std::vector<int>& radices) {
  for (std::size_t i = cell.size(); i-- > 0;) {
    if (cell[i] < radices[i]) {
      ++cell[i];
      return true;
    }
    cell[i] = 1;
  }
  return false;
}

// Secondary guard on total cells; the dense representation and the
// modular pass both materialize the full matrix.
constexpr std::size_t kMaxMatrixCells = std::size_t{1} << 26;

}  // namespace

DesignMatrix build_design_matrix(const ModelSpec& spec, std::size_t column_cap) {
  const Int total_cols = spec.joint_cells();
  if (total_cols > static_cast<unsigned long>(column_cap)) {
    throw size_cap_error("joint state space has " + total_cols.get_str() +
                         " cells, exceeding the size cap of " + std::to_string(column_cap));
  }
  const std::size_t cols = static_cast<std::size_t>(total_cols.get_ui());
  const int m = spec.complex.vertex_count();
  const auto& facets = spec.complex.facets();

  DesignMatrix mat;
  mat.cols = cols;

  // Row blocks: one per facet, one row per marginal cell.
  std::vector<std::size_t> block_start(facets.size());
  std::size_t rows = 0;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    block_start[fi] = rows;
    std::size_t block = 1;
    for (int v : facets[fi].vertices()) {
      block *= static_cast<std::size_t>(spec.levels[static_cast<std::size_t>(v - 1)]);
    }
    rows += block;
    if (rows * cols > kMaxMatrixCells) {
      throw size_cap_error("design matrix would exceed " + std::to_string(kMaxMatrixCells) +
                           " cells");
    }

    std::vector<int> radices;
    for (int v : facets[fi].vertices()) {
      radices.push_back(spec.levels[static_cast<std::size_t>(v - 1)]);
    }
    std::vector<int> cell(radices.size(), 1);
    for (std::size_t k = 0; k < block; ++k) {
      mat.row_index.push_back({fi, cell});
      next_cell(cell, radices);
    }
  }
  mat.rows = rows;
  mat.entries.assign(rows * cols, 0);

  // For each joint cell, each facet block gets exactly one 1: the row of the
  // cell's restriction to that facet.
  std::vector<int> joint(static_cast<std::size_t>(m), 1);
  mat.col_index.reserve(cols);
  for (std::size_t col = 0; col < cols; ++col) {
    mat.col_index.push_back(joint);
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      std::size_t offset = 0;
      for (int v : facets[fi].vertices()) {
        const std::size_t idx = static_cast<std::size_t>(v - 1);
        offset = offset * static_cast<std::size_t>(spec.levels[idx]) +
                 static_cast<std::size_t>(joint[idx] - 1);
      }
      mat.entries[(block_start[fi] + offset) * cols + col] = 1;
    }
    next_cell(joint, spec.levels);
  }
  return mat;
}

namespace {

using detail::DenseMatrix;

// ---------------------------------------------------------------------------
// Modular rank at the Mersenne prime 2^31 - 1: the cheap independent pass
// that runs directly on the raw 0/1 matrix.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

inline std::uint64_t mersenne_reduce(std::uint64_t x) {
  x = (x >> 31) + (x & kPrime);
  x = (x >> 31) + (x & kPrime);
  if (x >= kPrime) x -= kPrime;
  return x;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = mersenne_reduce(result * base);
    base = mersenne_reduce(base * base);
    exp >>= 1;
  }
  return result;
}

int rank_mod_prime(const std::vector<std::uint8_t>& entries, std::size_t rows,
                   std::size_t cols) {
  std::vector<std::uint32_t> m(entries.begin(), entries.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && m[pivot_row * cols + col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols + col),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot_row + 1) * cols),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * cols + col));
    }

    const std::uint64_t inv = mod_pow(m[rank * cols + col], kPrime - 2);
    const std::uint32_t* pivot_row_ptr = &m[rank * cols];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t* row = &m[i * cols];
      if (row[col] == 0) continue;
      const std::uint64_t factor = kPrime - mersenne_reduce(row[col] * inv);
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t t = row[j] + mersenne_reduce(factor * pivot_row_ptr[j]);
        row[j] = static_cast<std::uint32_t>(mersenne_reduce(t));
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// ---------------------------------------------------------------------------
// Gram condensation: for a very rectangular A, rank(A) over Q equals
// rank(A A^T) (or A^T A over the shorter side). With 0/1 entries the Gram
// matrix is a table of popcounts over packed bit rows.
// ---------------------------------------------------------------------------

DenseMatrix<std::int64_t> gram_matrix(const std::vector<std::uint8_t>& entries,
                                      std::size_t rows, std::size_t cols, bool transpose) {
  const std::size_t n = transpose ? cols : rows;
  const std::size_t len = transpose ? rows : cols;
  const std::size_t words = (len + 63) / 64;

  std::vector<std::uint64_t> bits(n * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!entries[r * cols + c]) continue;
      const std::size_t vec = transpose ? c : r;
      const std::size_t pos = transpose ? r : c;
      bits[vec * words + pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }

  DenseMatrix<std::int64_t> g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* bi = &bits[i * words];
    for (std::size_t j = i; j < n; ++j) {
      const std::uint64_t* bj = &bits[j * words];
      std::int64_t dot = 0;
      for (std::size_t w = 0; w < words; ++w) dot += __builtin_popcountll(bi[w] & bj[w]);
      g.at(i, j) = dot;
      g.at(j, i) = dot;
    }
  }
  return g;
}

// Direct elimination is preferred while the matrix is small; beyond that the
// Gram condensation keeps the Bareiss pass at the size of the shorter side.
constexpr std::size_t kDirectEliminationCells = std::size_t{1} << 16;

}  // namespace

int exact_rank(const DesignMatrix& mat) {
  if (mat.rows == 0 || mat.cols == 0) return 0;

  int rank;
  if (mat.rows * mat.cols <= kDirectEliminationCells) {
    DenseMatrix<std::int64_t> m(mat.rows, mat.cols);
    for (std::size_t i = 0; i < mat.entries.size(); ++i) m.a[i] = mat.entries[i];
    rank = detail::bareiss_rank_with_fallback(m);
  } else {
    DenseMatrix<std::int64_t> gram =
        gram_matrix(mat.entries, mat.rows, mat.cols, mat.cols < mat.rows);
    rank = detail::bareiss_rank_with_fallback(gram);
  }

  const int modular = rank_mod_prime(mat.entries, mat.rows, mat.cols);
  if (modular != rank) {
    throw inconsistency_error("exact rank " + std::to_string(rank) +
                              " disagrees with modular rank " + std::to_string(modular));
  }
  return rank;
}

VerifyOutcome verify_spec(const ModelSpec& spec, std::size_t column_cap) {
  VerifyOutcome out;
  out.formula_rank = eval_coarse_exact(spec.complex, spec.levels);
  try {
    const DesignMatrix mat = build_design_matrix(spec, column_cap);
    out.oracle_rank = exact_rank(mat);
    out.agree = (*out.oracle_rank == out.formula_rank);
  } catch (const size_cap_error&) {
    out.oracle_rank.reset();
    out.agree = false;
  }
  return out;
}

}  // namespace hilrank
