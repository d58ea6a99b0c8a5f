#ifndef GHZQ_GHZ_CORE_HPP
#define GHZQ_GHZ_CORE_HPP

#include <optional>
#include <span>
#include <vector>

#include "ghzq/observables.hpp"

namespace ghzq {

/// (1/sqrt(D)) sum_n |n>^(⊗N): D nonzero amplitudes, each 1/sqrt(D).
struct GhzState {
  int parties;
  int dim;
  StateVector vector;
};

GhzState ghz_state(int parties, int dim, std::int64_t amp_bound = kDefaultAmpBound);

/// Parameters of the concurrent-observable construction: N = N1 + N2 parties,
/// local dimension D = d*g with a nonunit divisor g, and N2 = eta*g factors
/// of Y = X(1/N2) per composite observable.
struct ConstructionParams {
  int parties = 0;  // N
  int dim = 0;      // D
  int n1 = 0;
  int n2 = 0;
  int g = 0;
  int d = 0;
  int eta = 0;

  void validate() const;  // throws std::invalid_argument on broken invariants
};

/// Params for a given N2, with g = gcd(N2, D) unless given explicitly.
ConstructionParams make_construction(int parties, int dim, int n2);
ConstructionParams make_construction(int parties, int dim, int n2, int g);

/// omega^c * X(alpha_1) ⊗ ... ⊗ X(alpha_N): a global phase exponent plus one
/// local phase parameter per party.
struct CompositeObservable {
  int parties = 0;
  int dim = 0;
  Rational global_phase_exp;         // c in the overall factor omega^c
  std::vector<Rational> site_alphas; // one alpha per party, party 1 first
};

/// True iff sum_k f_k(n) = 0 mod D for every n in 0..D-1, decided exactly.
bool check_invariance(std::span<const PhaseFunction> phases, int dim);

/// The N+1 concurrent composite observables: v_0 = X^(⊗N) and, for l = 1..N,
/// omega times X on the cyclic party block [l, l+N1-1] and Y = X(1/N2) on the
/// other N2 parties. Every party is X in exactly N1 and Y in exactly N2 of
/// v_1..v_N.
std::vector<CompositeObservable> build_concurrent_set(const ConstructionParams& p);

StateVector apply_composite(const CompositeObservable& v, const StateVector& s);

struct EigenstateReport {
  std::vector<double> residuals;  // ||v s - s|| per observable
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

EigenstateReport verify_common_eigenstate(std::span<const CompositeObservable> set,
                                          const StateVector& s, double tol = 1e-10);

/// One row of local measurement choices: X(alpha_k) at party k.
struct MeasurementSetting {
  std::vector<Rational> alphas;
};

/// Joint outcome distribution P(m_1..m_N) over Z_D^N, stored dense with the
/// global mixed-radix indexing (party 1 most significant).
class JointDistribution {
public:
  JointDistribution(int parties, int dim, std::vector<double> probs);

  int parties() const { return parties_; }
  int dim() const { return dim_; }
  std::int64_t size() const { return static_cast<std::int64_t>(probs_.size()); }

  double prob_at(std::int64_t index) const { return probs_[static_cast<std::size_t>(index)]; }
  double prob(std::span<const int> outcome) const;
  const std::vector<double>& table() const { return probs_; }
  double sum() const;

private:
  int parties_;
  int dim_;
  std::vector<double> probs_;
};

/// P(m) = |(<m_1|_alpha_1 ⊗ ... ⊗ <m_N|_alpha_N) |s>|^2 for all m, computed
/// by rotating s into the product eigenbasis site by site.
JointDistribution joint_distribution(const MeasurementSetting& setting, const StateVector& s);

/// <s| omega^c X(alpha_1) ⊗ ... ⊗ X(alpha_N) |s>. Recomputed internally as
/// sum_m omega^(sum_k m_k + c) P(m); a ConsistencyError is raised if the two
/// routes differ by more than 1e-10.
Complex correlation_function(const MeasurementSetting& setting, const Rational& phase_exp,
                             const StateVector& s);

/// The offset c with support(dist) contained in { m : sum_k m_k = c mod D },
/// or nullopt when no single residue covers the support (threshold 1e-10).
std::optional<int> perfect_correlation_offset(const JointDistribution& dist);

} // namespace ghzq

#endif
