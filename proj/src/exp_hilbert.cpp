#include "hilrank/exp_hilbert.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilrank {

EVector e_vector(const FVector& f) {
  validate(f);
  const int d = f.d();
  EVector e;
  e.coeffs.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int sum = 0;
    for (int i = k; i <= d; ++i) {
      Int term = f.counts[static_cast<std::size_t>(i)] *
                 binomial(static_cast<unsigned>(i), static_cast<unsigned>(k));
      if ((i - k) & 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    e.coeffs[static_cast<std::size_t>(k)] = sum;
  }
  return e;
}

FVector f_from_e(const EVector& e) {
  if (e.coeffs.empty()) throw std::invalid_argument("e-vector must be non-empty");
  const int d = e.d();
  FVector f;
  f.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    Int sum = 0;
    for (int k = i; k <= d; ++k) {
      sum += binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) *
             e.coeffs[static_cast<std::size_t>(k)];
    }
    f.counts[static_cast<std::size_t>(i)] = sum;
  }
  try {
    validate(f);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("e-vector does not arise from a simplicial complex");
  }
  return f;
}

Int eval_coarse_exact(const SimplicialComplex& c, const std::vector<int>& levels) {
  if (static_cast<int>(levels.size()) != c.vertex_count()) {
    throw std::invalid_argument("levels length " + std::to_string(levels.size()) +
                                " does not match vertex count " +
                                std::to_string(c.vertex_count()));
  }
  for (int r : levels) {
    if (r < 1) throw std::invalid_argument("levels must be at least 1");
  }

  Int total = 0;
  for (const Face& face : c.faces()) {
    Int product = 1;
    for (int v : face.vertices()) {
      product *= levels[static_cast<std::size_t>(v - 1)] - 1;
      if (product == 0) break;
    }
    total += product;
  }
  return total;
}

Int eval_fine_polynomial(const SimplicialComplex& c, int r) {
  if (r < 1) throw std::invalid_argument("level r must be at least 1");
  const EVector e = e_vector(c.f_vector());
  // Horner evaluation at r.
  Int value = 0;
  for (std::size_t k = e.coeffs.size(); k-- > 0;) {
    value = value * r + e.coeffs[k];
  }
  return value;
}

namespace {

constexpr std::size_t kSeriesNodeBudget = std::size_t{1} << 28;

// Graded enumeration of the multi-indices of one total degree: coordinate
// `pos` takes every value 0..remaining, the last coordinate absorbs the
// remainder. Subtrees whose support already fails is_face are skipped,
// since supports only grow.
double sum_degree_terms(const SimplicialComplex& c, const std::vector<double>& x,
                        std::size_t pos, int remaining, double coeff,
                        std::vector<int>& support, std::size_t& nodes) {
  if (++nodes > kSeriesNodeBudget) {
    throw std::length_error("truncated series enumeration too large");
  }
  const std::size_t m = x.size();
  if (pos + 1 == m) {
    double factor = 1.0;
    for (int k = 1; k <= remaining; ++k) factor *= x[pos] / k;
    if (remaining > 0) {
      support.push_back(static_cast<int>(pos) + 1);
      const bool ok = c.is_face(Face(support));
      support.pop_back();
      if (!ok) return 0.0;
    }
    return coeff * factor;
  }

  double total = 0.0;
  double factor = 1.0;
  for (int v = 0; v <= remaining; ++v) {
    if (v > 0) factor *= x[pos] / v;
    bool pushed = false;
    if (v > 0) {
      support.push_back(static_cast<int>(pos) + 1);
      pushed = true;
      if (!c.is_face(Face(support))) {
        support.pop_back();
        break;  // larger v keeps the same non-face support
      }
    }
    total += sum_degree_terms(c, x, pos + 1, remaining - v, coeff * factor, support, nodes);
    if (pushed) support.pop_back();
  }
  return total;
}

}  // namespace

double truncated_coarse_series(const SimplicialComplex& c, const std::vector<double>& x,
                               int total_degree) {
  if (static_cast<int>(x.size()) != c.vertex_count()) {
    throw std::invalid_argument("x length does not match vertex count");
  }
  if (total_degree < 0) throw std::invalid_argument("total degree must be non-negative");

  std::size_t nodes = 0;
  std::vector<int> support;
  double total = 0.0;
  for (int g = 0; g <= total_degree; ++g) {
    total += sum_degree_terms(c, x, 0, g, 1.0, support, nodes);
  }
  return total;
}

bool is_dehn_sommerville(const SimplicialComplex& c) {
  const FVector f = c.f_vector();
  const EVector e = e_vector(f);
  const int d = f.d();
  for (int i = 0; i <= d; ++i) {
    const Int& fi = f.counts[static_cast<std::size_t>(i)];
    const Int& ei = e.coeffs[static_cast<std::size_t>(i)];
    if ((d - i) & 1) {
      if (ei != -fi) return false;
    } else {
      if (ei != fi) return false;
    }
  }
  return true;
}

}  // namespace hilrank
