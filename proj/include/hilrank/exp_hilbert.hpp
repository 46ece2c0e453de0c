#pragma once

#include <vector>

#include "hilrank/bigint.hpp"
#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// Coefficients (E_0, ..., E_d) of the fine exponential Hilbert series of
/// a complex written as a polynomial in e^t, with d = dim + 1.
struct EVector {
  std::vector<Int> coeffs;

  int d() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const EVector& other) const = default;
};

/// e-vector from the f-vector: E_k = sum_{i=k}^{d} (-1)^{i-k} f_{i-1} C(i,k).
EVector e_vector(const FVector& f);

/// Inverse binomial transform: f_{i-1} = sum_{k=i}^{d} C(k,i) E_k.
/// Throws std::domain_error if the result violates the f-vector
/// invariants (f_{-1} != 1 or a non-positive entry), which means the
/// input does not arise from a complex.
FVector f_from_e(const EVector& e);

/// Exact value of the coarse exponential Hilbert series at x_f = log(r_f):
/// sum over faces F of prod_{f in F} (r_f - 1). This equals rank(A_Gamma)
/// for the hierarchical model with per-variable level counts r.
Int eval_coarse_exact(const SimplicialComplex& c, const std::vector<int>& levels);

/// Exact value of the fine series at t = log(r): E_0 + E_1 r + ... + E_d r^d.
/// Equals eval_coarse_exact with a constant level vector.
Int eval_fine_polynomial(const SimplicialComplex& c, int r);

/// Numerical oracle: the coarse series summed directly over its graded
/// components,
///   sum over multi-indices a with |a| <= total_degree and supp(a) a face
///   of prod x_i^{a_i} / a_i!.
/// Multi-indices are iterated in graded order. Throws std::length_error
/// when the multi-index count is astronomically large.
double truncated_coarse_series(const SimplicialComplex& c, const std::vector<double>& x,
                               int total_degree);

/// Dehn-Sommerville test, operationalized through the e-vector:
/// true iff E_i = (-1)^{d-i} f_{i-1} for all i = 0..d.
bool is_dehn_sommerville(const SimplicialComplex& c);

}  // namespace hilrank
