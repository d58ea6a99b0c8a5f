#ifndef GHZQ_LHV_ENGINE_HPP
#define GHZQ_LHV_ENGINE_HPP

#include <optional>
#include <span>
#include <vector>

#include "ghzq/ghz_core.hpp"

namespace ghzq {

inline constexpr std::int64_t kDefaultLhvBound = 100'000'000;

enum class SettingLabel : char { X = 'X', Y = 'Y' };

/// "sum_k (value of party k under its label) = offset (mod D)" — the modular
/// constraint a perfect correlation imposes on predetermined outcomes.
struct CorrelationConstraint {
  std::vector<SettingLabel> labels;  // one per party
  int offset = 0;                    // in Z_D
};

/// Predetermined outcome exponents, one x and one y value per party.
struct LhvAssignment {
  std::vector<int> x;
  std::vector<int> y;
};

bool satisfies(const LhvAssignment& a, const CorrelationConstraint& c, int dim);

/// The constraint list of the cyclic construction for any N1 + N2 = N split:
/// all-X = 0, then N constraints with X on the cyclic block [l, l+N1-1] and
/// offset -1 mod D. Accepts any N2 in [1, N-1]; no divisor bookkeeping.
std::vector<CorrelationConstraint> cyclic_constraints(int parties, int dim, int n1, int n2);

std::vector<CorrelationConstraint> constraints_from_params(const ConstructionParams& p);

/// Exhaustive scan of all (x, y) in Z_D^N x Z_D^N in lexicographic order of
/// the concatenated tuple (x_1..x_N, y_1..y_N); returns the first assignment
/// satisfying every constraint, or nullopt. Deterministic. Throws
/// ResourceLimitError when D^(2N) exceeds `bound`.
std::optional<LhvAssignment> brute_force_search(std::span<const CorrelationConstraint> constraints,
                                                int parties, int dim,
                                                std::int64_t bound = kDefaultLhvBound);

/// Solvability of N2*y + N = 0 (mod D) in y: solvable iff gcd(N2, D) | N.
/// The x side (N1 * sum x = 0) is always satisfiable by all-zero x.
struct AnalyticWitness {
  std::int64_t gcd_value = 0;  // gcd(N2, D)
  bool divides_parties = false;
};

AnalyticWitness analytic_solvable(int parties, int dim, int n2);

struct LhvSearchResult {
  std::int64_t space_size = 0;  // D^(2N)
  bool searched = false;        // false when skipped above the bound
  std::optional<LhvAssignment> satisfying;
};

struct CertifyOptions {
  double tolerance = 1e-10;
  std::int64_t lhv_bound = kDefaultLhvBound;
  std::int64_t amp_bound = kDefaultAmpBound;
  // Skip the brute force (flagging the certificate analytic-only) instead of
  // raising ResourceLimitError when the assignment space exceeds lhv_bound.
  bool analytic_fallback = true;
};

/// Quantum verification + LHV search + analytic witness, cross-validated.
struct ContradictionCertificate {
  ConstructionParams params;
  std::vector<double> quantum_residuals;
  double quantum_max_residual = 0.0;
  double tolerance = 0.0;
  LhvSearchResult lhv_search;
  AnalyticWitness analytic;
  bool contradiction = false;
};

/// Runs verify_common_eigenstate, brute_force_search and analytic_solvable,
/// asserting that brute-force emptiness and analytic unsolvability agree
/// (ConsistencyError otherwise — an implementation bug, not physics).
ContradictionCertificate certify(const ConstructionParams& p, const CertifyOptions& opt = {});

} // namespace ghzq

#endif
