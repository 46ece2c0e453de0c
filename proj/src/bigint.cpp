#include "hilrank/bigint.hpp"

#include <vector>

namespace hilrank {

const Int& binomial(unsigned n, unsigned k) {
  static thread_local std::vector<std::vector<Int>> pascal{{1}};
  if (k > n) {
    static const Int zero = 0;
    return zero;
  }
  while (pascal.size() <= n) {
    const auto& prev = pascal.back();
    std::vector<Int> row(prev.size() + 1, 1);
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

std::optional<std::int64_t> to_int64(const Int& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace hilrank
