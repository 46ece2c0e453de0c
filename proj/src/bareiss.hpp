// Fraction-free (Bareiss) rank-revealing elimination. Internal header,
// shared between the design-matrix oracle and its tests.
#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hilrank/bigint.hpp"

namespace hilrank::detail {

struct Int64Overflow {};

template <typename T>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
  }
};

// One Bareiss update (pivot*mij - mik*mkj) / prev; the division is exact
// because the entries are minors of the input.
inline std::int64_t fused_update(std::int64_t pivot, std::int64_t mij, std::int64_t mik,
                                 std::int64_t mkj, std::int64_t prev) {
  const __int128 t = static_cast<__int128>(pivot) * mij - static_cast<__int128>(mik) * mkj;
  const __int128 q = t / prev;
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min()) {
    throw Int64Overflow{};
  }
  return static_cast<std::int64_t>(q);
}

inline Int fused_update(const Int& pivot, const Int& mij, const Int& mik, const Int& mkj,
                        const Int& prev) {
  Int t = pivot * mij - mik * mkj;
  Int q;
  mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return q;
}

// Pivot rule: first row with a nonzero entry in the current column; columns
// with no pivot are skipped, which keeps the exact-division property.
template <typename T>
int bareiss_rank(DenseMatrix<T>& m) {
  T prev = T(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < m.rows && m.at(pivot_row, col) == T(0)) ++pivot_row;
    if (pivot_row == m.rows) continue;
    m.swap_rows(rank, pivot_row);

    const T pivot = m.at(rank, col);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const T mik = m.at(i, col);
      if (mik == T(0) && pivot == prev) continue;  // row would be rescaled by 1
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        m.at(i, j) = fused_update(pivot, m.at(i, j), mik, m.at(rank, j), prev);
      }
      m.at(i, col) = T(0);
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<int>(rank);
}

// Fast int64 attempt with a restart in big integers when a minor overflows.
inline int bareiss_rank_with_fallback(const DenseMatrix<std::int64_t>& seed) {
  DenseMatrix<std::int64_t> work = seed;
  try {
    return bareiss_rank(work);
  } catch (const Int64Overflow&) {
    DenseMatrix<Int> big(seed.rows, seed.cols);
    for (std::size_t i = 0; i < seed.a.size(); ++i) big.a[i] = seed.a[i];
    return bareiss_rank(big);
  }
}

}  // namespace hilrank::detail
