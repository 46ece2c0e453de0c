#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilrank/bigint.hpp"
#include "hilrank/design_matrix.hpp"
#include "hilrank/exp_hilbert.hpp"
#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// The formula route a rank value came from.
enum class RankMethod {
  CoarseSeries,     ///< coarse series at log levels; works for varying levels
  FinePolynomial,   ///< e-vector polynomial at a constant level
  FaceVector,       ///< double sum directly from the f-vector
  DehnSommerville,  ///< alternating f-vector polynomial; DS complexes only
};

std::string to_string(RankMethod method);

/// rank(A_Gamma) = sum over faces F of prod_{f in F}(r_f - 1).
Int rank_coarse(const ModelSpec& spec);

/// rank(A_Gamma) for constant levels, computed as the double sum
/// sum_{k=0}^{d} sum_{i=k}^{d} (-1)^{i-k} f_{i-1} C(i,k) r^k directly from
/// the f-vector (no e-vector intermediary).
Int rank_face_vector(const SimplicialComplex& c, int r);

/// rank(A_Gamma) = sum_{i=0}^{d} (-1)^{d-i} f_{i-1} r^i for a complex
/// satisfying the Dehn-Sommerville relations. Throws not_ds_error when the
/// precondition fails.
Int rank_ds(const SimplicialComplex& c, int r);

/// Rank, model dimension and degrees of freedom of one model, with every
/// applicable formula route cross-checked.
struct RankReport {
  Int rank;
  Int model_dimension;     ///< rank - 1
  Int degrees_of_freedom;  ///< prod r_i - rank
  RankMethod method = RankMethod::CoarseSeries;
  std::vector<RankMethod> cross_checks;  ///< routes that were computed and agreed
  bool ds_model = false;
  bool oracle_checked = false;
  std::optional<Int> oracle_rank;
  bool oracle_agrees = false;
};

/// Computes the report. The coarse series is always the source of truth;
/// with constant levels the fine-polynomial and face-vector routes (and
/// the DS route when applicable) are computed as cross-checks and any
/// disagreement throws inconsistency_error. With verify set, the explicit
/// matrix oracle runs as well; a size-cap overflow leaves oracle_checked
/// false rather than failing the report.
RankReport report(const ModelSpec& spec, bool verify,
                  std::size_t column_cap = kDefaultColumnCap);

}  // namespace hilrank
