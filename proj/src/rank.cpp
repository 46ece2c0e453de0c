#include "hilrank/rank.hpp"

#include <stdexcept>

#include "hilrank/errors.hpp"

namespace hilrank {

std::string to_string(RankMethod method) {
  switch (method) {
    case RankMethod::CoarseSeries:
      return "coarse-series";
    case RankMethod::FinePolynomial:
      return "fine-polynomial";
    case RankMethod::FaceVector:
      return "face-vector";
    case RankMethod::DehnSommerville:
      return "dehn-sommerville";
  }
  return "unknown";
}

Int rank_coarse(const ModelSpec& spec) { return eval_coarse_exact(spec.complex, spec.levels); }

Int rank_face_vector(const SimplicialComplex& c, int r) {
  if (r < 1) throw std::invalid_argument("level r must be at least 1");
  const FVector f = c.f_vector();
  const int d = f.d();
  Int total = 0;
  Int r_pow = 1;
  for (int k = 0; k <= d; ++k) {
    for (int i = k; i <= d; ++i) {
      Int term = f.counts[static_cast<std::size_t>(i)] *
                 binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) * r_pow;
      if ((i - k) & 1) {
        total -= term;
      } else {
        total += term;
      }
    }
    r_pow *= r;
  }
  return total;
}

Int rank_ds(const SimplicialComplex& c, int r) {
  if (r < 1) throw std::invalid_argument("level r must be at least 1");
  if (!is_dehn_sommerville(c)) {
    throw not_ds_error("complex does not satisfy the Dehn-Sommerville relations");
  }
  const FVector f = c.f_vector();
  const int d = f.d();
  Int total = 0;
  Int r_pow = 1;
  for (int i = 0; i <= d; ++i) {
    if ((d - i) & 1) {
      total -= f.counts[static_cast<std::size_t>(i)] * r_pow;
    } else {
      total += f.counts[static_cast<std::size_t>(i)] * r_pow;
    }
    r_pow *= r;
  }
  return total;
}

RankReport report(const ModelSpec& spec, bool verify, std::size_t column_cap) {
  RankReport rep;
  rep.rank = rank_coarse(spec);
  rep.method = RankMethod::CoarseSeries;
  rep.ds_model = is_dehn_sommerville(spec.complex);

  if (const auto r = spec.constant_level()) {
    const Int fine = eval_fine_polynomial(spec.complex, *r);
    if (fine != rep.rank) {
      throw inconsistency_error("fine polynomial rank " + fine.get_str() +
                                " disagrees with coarse series rank " + rep.rank.get_str());
    }
    rep.cross_checks.push_back(RankMethod::FinePolynomial);

    const Int fvec = rank_face_vector(spec.complex, *r);
    if (fvec != rep.rank) {
      throw inconsistency_error("face-vector rank " + fvec.get_str() +
                                " disagrees with coarse series rank " + rep.rank.get_str());
    }
    rep.cross_checks.push_back(RankMethod::FaceVector);

    if (rep.ds_model) {
      const Int ds = rank_ds(spec.complex, *r);
      if (ds != rep.rank) {
        throw inconsistency_error("Dehn-Sommerville rank " + ds.get_str() +
                                  " disagrees with coarse series rank " + rep.rank.get_str());
      }
      rep.cross_checks.push_back(RankMethod::DehnSommerville);
    }
  }

  rep.model_dimension = rep.rank - 1;
  rep.degrees_of_freedom = spec.joint_cells() - rep.rank;

  if (verify) {
    const VerifyOutcome outcome = verify_spec(spec, column_cap);
    rep.oracle_checked = outcome.oracle_checked();
    rep.oracle_rank = outcome.oracle_rank;
    rep.oracle_agrees = outcome.agree;
  }
  return rep;
}

}  // namespace hilrank
