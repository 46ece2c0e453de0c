#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hilrank {

/// Exact arbitrary-precision integer. All rank and coefficient arithmetic
/// in this library is carried out in this type; doubles appear only in the
/// truncated-series oracle.
using Int = mpz_class;

/// Binomial coefficient C(n, k), exact, from a thread-local Pascal table.
const Int& binomial(unsigned n, unsigned k);

/// Value as int64_t when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(const Int& v);

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace hilrank
