#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bareiss.hpp"
#include "naive_oracles.hpp"

using hilrank::Int;
using hilrank::detail::DenseMatrix;

namespace {

int rational_rank_of(const DenseMatrix<std::int64_t>& m) {
  std::vector<std::vector<mpq_class>> q(m.rows, std::vector<mpq_class>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) q[r][c] = static_cast<long>(m.at(r, c));
  }
  return naive::rational_rank(std::move(q));
}

}  // namespace

TEST_CASE("bareiss rank on fixed matrices") {
  DenseMatrix<std::int64_t> zero(3, 4);
  CHECK(hilrank::detail::bareiss_rank(zero) == 0);

  DenseMatrix<std::int64_t> dependent(2, 2);
  dependent.at(0, 0) = 2;
  dependent.at(0, 1) = 4;
  dependent.at(1, 0) = 1;
  dependent.at(1, 1) = 2;
  CHECK(hilrank::detail::bareiss_rank(dependent) == 1);

  // Vandermonde on distinct nodes is provably full rank.
  DenseMatrix<std::int64_t> vand(4, 4);
  const std::int64_t nodes[4] = {1, 2, 3, 5};
  for (std::size_t r = 0; r < 4; ++r) {
    std::int64_t p = 1;
    for (std::size_t c = 0; c < 4; ++c) {
      vand.at(r, c) = p;
      p *= nodes[r];
    }
  }
  CHECK(hilrank::detail::bareiss_rank(vand) == 4);
}

TEST_CASE("bareiss agrees with rational elimination on random matrices") {
  std::mt19937_64 rng(551);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 8;
    DenseMatrix<std::int64_t> m(rows, cols);
    for (auto& v : m.a) v = static_cast<std::int64_t>(rng() % 11) - 5;

    // Half the trials get a forced dependency.
    if (rows >= 2 && (rng() & 1)) {
      const std::size_t dup = 1 + rng() % (rows - 1);
      const std::int64_t scale = static_cast<std::int64_t>(rng() % 5) - 2;
      for (std::size_t c = 0; c < cols; ++c) m.at(dup, c) = scale * m.at(0, c);
    }

    const int expected = rational_rank_of(m);
    DenseMatrix<std::int64_t> work = m;
    CHECK(hilrank::detail::bareiss_rank(work) == expected);

    DenseMatrix<Int> big(rows, cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) big.a[i] = m.a[i];
    CHECK(hilrank::detail::bareiss_rank(big) == expected);
  }
}

TEST_CASE("int64 overflow falls back to big integers") {
  // First update already needs pivot*mij ~ 2^84, so the int64 pass must
  // bail out and the big-integer pass must still get the rank right.
  const std::int64_t big = std::int64_t{1} << 42;
  DenseMatrix<std::int64_t> m(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = (r == c) ? big : 1;
  }
  DenseMatrix<std::int64_t> work = m;
  CHECK_THROWS_AS(hilrank::detail::bareiss_rank(work), hilrank::detail::Int64Overflow);
  CHECK(hilrank::detail::bareiss_rank_with_fallback(m) == 3);

  DenseMatrix<std::int64_t> singular(2, 2);
  singular.at(0, 0) = big;
  singular.at(0, 1) = big;
  singular.at(1, 0) = big;
  singular.at(1, 1) = big;
  CHECK(hilrank::detail::bareiss_rank_with_fallback(singular) == 1);
}
