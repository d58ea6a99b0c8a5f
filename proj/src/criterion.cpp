#include "ghzq/criterion.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ghzq/errors.hpp"

namespace ghzq {

CriterionResult admissible_constructions(int parties, int dim) {
  if (parties < 3 || dim < 2)
    throw std::invalid_argument("admissible_constructions: parties >= 3, dim >= 2");
  CriterionResult result;
  result.parties = parties;
  result.dim = dim;
  for (int n2 = 1; n2 <= parties - 1; ++n2) {
    const std::int64_t g = std::gcd(static_cast<std::int64_t>(n2), static_cast<std::int64_t>(dim));
    if (parties % g != 0) result.admissible.push_back(AdmissibleN2{n2, g});
  }
  if (!result.admissible.empty()) {
    // Smallest admissible N2; maximizes the number of X factors.
    result.chosen = make_construction(parties, dim, result.admissible.front().n2);
  }
  return result;
}

ConstructionParams ghz_three_qubit_case() { return make_construction(3, 2, 2); }

ConstructionParams zukowski_case(int dim) {
  if (dim < 2) throw std::invalid_argument("zukowski_case: dim >= 2 required");
  return make_construction(dim + 1, dim, dim);  // g = gcd(D, D) = D, never dividing D+1
}

ConstructionParams cerf_lee_case(int parties, int dim) {
  if (parties < 3 || parties % 2 == 0)
    throw std::invalid_argument("cerf_lee_case: odd parties >= 3 required");
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("cerf_lee_case: even dim required");
  const int n2 = parties - 1;  // largest even N2 <= N-1; leaves N1 odd
  return make_construction(parties, dim, n2, 2);
}

ConstructionParams reproduce_known_case(KnownCase known, int parties, int dim) {
  switch (known) {
    case KnownCase::Ghz3Qubit:
      return ghz_three_qubit_case();
    case KnownCase::ZukowskiDplus1:
      return zukowski_case(dim);
    case KnownCase::CerfLeeOddNEvenD:
      return cerf_lee_case(parties, dim);
  }
  throw std::invalid_argument("reproduce_known_case: unknown case id");
}

namespace {

CompositeObservable drop_party(const CompositeObservable& v, int removed_party) {
  CompositeObservable reduced;
  reduced.parties = v.parties - 1;
  reduced.dim = v.dim;
  reduced.global_phase_exp = v.global_phase_exp;  // kept verbatim
  reduced.site_alphas.reserve(static_cast<std::size_t>(v.parties - 1));
  for (int k = 1; k <= v.parties; ++k) {
    if (k == removed_party) continue;
    reduced.site_alphas.push_back(v.site_alphas[static_cast<std::size_t>(k - 1)]);
  }
  return reduced;
}

// Exact eigenstate test for omega^c X(a_1) ⊗ ... ⊗ X(a_M) on the M-party GHZ
// state: absorb the global phase into the phase list (X(a - c) = omega^c X(a)
// for integer c) and apply the invariance congruence, which collapses to
// (sum_k a_k - c) = 0 mod D over the rationals.
bool reduced_eigenstate_oracle(const CompositeObservable& v) {
  Rational alpha_sum(0);
  for (const Rational& a : v.site_alphas) alpha_sum += a;
  return congruent_zero_mod_dim(alpha_sum - v.global_phase_exp, v.dim);
}

} // namespace

NPartiteReport genuinely_npartite_check(const ConstructionParams& p, std::int64_t amp_bound) {
  p.validate();
  if (p.parties < 3)
    throw std::invalid_argument("genuinely_npartite_check: need at least 3 parties");

  const std::vector<CompositeObservable> set = build_concurrent_set(p);
  const GhzState reduced_state = ghz_state(p.parties - 1, p.dim, amp_bound);

  NPartiteReport report;
  report.residual_threshold = kReducedResidualThreshold;
  report.genuinely_npartite = true;

  for (int removed = 1; removed <= p.parties; ++removed) {
    PartyRemovalResult row;
    row.removed_party = removed;
    for (std::size_t l = 0; l < set.size(); ++l) {
      const CompositeObservable reduced = drop_party(set[l], removed);
      StateVector image = apply_composite(reduced, reduced_state.vector);
      double sq = 0.0;
      for (std::int64_t i = 0; i < image.size(); ++i)
        sq += std::norm(image[i] - reduced_state.vector[i]);
      const double residual = std::sqrt(sq);
      row.residuals.push_back(residual);
      if (residual > kReducedResidualThreshold) row.failing.push_back(static_cast<int>(l));
      if (!reduced_eigenstate_oracle(reduced)) row.oracle_failing.push_back(static_cast<int>(l));
    }
    if (row.failing != row.oracle_failing)
      throw ConsistencyError("genuinely_npartite_check: numerical failures disagree with the "
                             "exact reduced-phase oracle (removed party " +
                             std::to_string(removed) + ")");
    if (row.failing.empty()) report.genuinely_npartite = false;
    report.removals.push_back(std::move(row));
  }
  return report;
}

DDimReport genuinely_ddim_check(int dim, const Rational& alpha, const Rational& beta) {
  if (dim < 2) throw std::invalid_argument("genuinely_ddim_check: dim >= 2 required");
  if (equivalent(alpha, beta))
    throw std::invalid_argument("genuinely_ddim_check: beta - alpha must not be an integer");

  DDimReport report;
  report.min_overlap = 2.0;  // above any overlap
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      const double v = overlap_sq(dim, n, alpha, m, beta);
      if (v < report.min_overlap) {
        report.min_overlap = v;
        report.argmin_n = n;
        report.argmin_m = m;
      }
    }
  }
  report.positive = report.min_overlap > 1e-9;
  return report;
}

} // namespace ghzq
