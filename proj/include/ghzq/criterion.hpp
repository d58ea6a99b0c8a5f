#ifndef GHZQ_CRITERION_HPP
#define GHZQ_CRITERION_HPP

#include <optional>
#include <vector>

#include "ghzq/lhv_engine.hpp"

namespace ghzq {

/// Residual above which a reduced observable counts as having lost the
/// eigenstate property in the N-partiteness check.
inline constexpr double kReducedResidualThreshold = 1e-6;

struct AdmissibleN2 {
  int n2 = 0;
  std::int64_t gcd_value = 0;  // gcd(n2, D), never dividing N
};

/// Divisor criterion: the construction certifies a contradiction for (N, D)
/// iff some N2 in [1, N-1] has gcd(N2, D) not dividing N.
struct CriterionResult {
  int parties = 0;
  int dim = 0;
  std::vector<AdmissibleN2> admissible;
  std::optional<ConstructionParams> chosen;  // smallest admissible N2
};

CriterionResult admissible_constructions(int parties, int dim);

/// Parameter choices reproducing previously known contradictions.
enum class KnownCase {
  Ghz3Qubit,        // (N, D, N1, N2) = (3, 2, 1, 2)
  ZukowskiDplus1,   // N = D + 1, N1 = 1, N2 = D
  CerfLeeOddNEvenD, // odd N, even D, g = 2, N2 = largest even <= N-1
};

ConstructionParams ghz_three_qubit_case();
ConstructionParams zukowski_case(int dim);
ConstructionParams cerf_lee_case(int parties, int dim);
ConstructionParams reproduce_known_case(KnownCase known, int parties = 0, int dim = 0);

/// One row of the N-partiteness check: observable residuals against
/// ghz_state(N-1, D) after deleting `removed_party` from every observable
/// (global phase kept). `oracle_failing` is the exact prediction from the
/// invariance congruence on the reduced phase list with the global phase
/// absorbed: fails iff (sum_k alpha_k - c) != 0 mod D.
struct PartyRemovalResult {
  int removed_party = 0;              // 1-based
  std::vector<double> residuals;      // one per observable v_0..v_N
  std::vector<int> failing;           // indices with residual > threshold
  std::vector<int> oracle_failing;    // exact-arithmetic prediction
};

struct NPartiteReport {
  std::vector<PartyRemovalResult> removals;
  double residual_threshold = kReducedResidualThreshold;
  bool genuinely_npartite = false;  // every removal breaks some observable
};

NPartiteReport genuinely_npartite_check(const ConstructionParams& p,
                                        std::int64_t amp_bound = kDefaultAmpBound);

/// Minimum eigenbasis overlap between X(alpha) and X(beta) over all (n, m)
/// pairs; strictly positive for nonintegral beta - alpha, which rules out a
/// simultaneous block diagonalization into subdimensional observables.
struct DDimReport {
  double min_overlap = 0.0;
  int argmin_n = 0;
  int argmin_m = 0;
  bool positive = false;
};

/// Precondition: beta - alpha is not an integer (std::invalid_argument).
DDimReport genuinely_ddim_check(int dim, const Rational& alpha, const Rational& beta);

} // namespace ghzq

#endif
