#include "ghzq/ghz_core.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ghzq/errors.hpp"

namespace ghzq {

GhzState ghz_state(int parties, int dim, std::int64_t amp_bound) {
  if (parties < 2 || dim < 2) throw std::invalid_argument("ghz_state: need parties >= 2, dim >= 2");
  checked_pow(dim, parties, amp_bound);
  StateVector v(parties, dim);
  // |n...n> sits at n * (D^N - 1)/(D - 1) = n * sum_k D^k.
  std::int64_t step = 0;
  std::int64_t power = 1;
  for (int k = 0; k < parties; ++k) {
    step += power;
    power *= dim;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int n = 0; n < dim; ++n) v[n * step] = Complex{amp, 0.0};
  return GhzState{parties, dim, std::move(v)};
}

void ConstructionParams::validate() const {
  if (parties < 2 || dim < 2) throw std::invalid_argument("ConstructionParams: parties >= 2, dim >= 2");
  if (n1 < 1 || n2 < 1 || n1 + n2 != parties)
    throw std::invalid_argument("ConstructionParams: need N1 >= 1, N2 >= 1, N1 + N2 = N");
  if (g < 2 || d < 1 || d * g != dim)
    throw std::invalid_argument("ConstructionParams: need D = d*g with nonunit divisor g");
  if (eta < 1 || eta * g != n2) throw std::invalid_argument("ConstructionParams: need N2 = eta*g");
}

ConstructionParams make_construction(int parties, int dim, int n2) {
  if (n2 < 1) throw std::invalid_argument("make_construction: N2 >= 1 required");
  return make_construction(parties, dim, n2, static_cast<int>(std::gcd(n2, dim)));
}

ConstructionParams make_construction(int parties, int dim, int n2, int g) {
  ConstructionParams p;
  p.parties = parties;
  p.dim = dim;
  p.n1 = parties - n2;
  p.n2 = n2;
  p.g = g;
  p.d = (g != 0) ? dim / g : 0;
  p.eta = (g != 0) ? n2 / g : 0;
  p.validate();
  return p;
}

bool check_invariance(std::span<const PhaseFunction> phases, int dim) {
  if (dim < 2) throw std::invalid_argument("check_invariance: dim >= 2 required");
  for (int n = 0; n < dim; ++n) {
    Rational sum(0);
    for (const PhaseFunction& f : phases) sum += f(n);
    if (!congruent_zero_mod_dim(sum, dim)) return false;
  }
  return true;
}

std::vector<CompositeObservable> build_concurrent_set(const ConstructionParams& p) {
  p.validate();
  const Rational y_alpha(1, p.n2);
  std::vector<CompositeObservable> set;
  set.reserve(static_cast<std::size_t>(p.parties) + 1);

  CompositeObservable v0;
  v0.parties = p.parties;
  v0.dim = p.dim;
  v0.global_phase_exp = Rational(0);
  v0.site_alphas.assign(static_cast<std::size_t>(p.parties), Rational(0));
  set.push_back(std::move(v0));

  // v_l carries X on the cyclic block of N1 parties starting at party l,
  // Y = X(1/N2) elsewhere, and a global omega.
  for (int l = 1; l <= p.parties; ++l) {
    CompositeObservable v;
    v.parties = p.parties;
    v.dim = p.dim;
    v.global_phase_exp = Rational(1);
    v.site_alphas.assign(static_cast<std::size_t>(p.parties), y_alpha);
    for (int t = 0; t < p.n1; ++t) {
      const int party = ((l - 1 + t) % p.parties);  // 0-based
      v.site_alphas[static_cast<std::size_t>(party)] = Rational(0);
    }
    set.push_back(std::move(v));
  }
  return set;
}

StateVector apply_composite(const CompositeObservable& v, const StateVector& s) {
  if (v.parties != s.parties() || v.dim != s.dim())
    throw std::invalid_argument("apply_composite: observable/state dimension mismatch");
  StateVector out = s;
  for (int site = 1; site <= v.parties; ++site) {
    out = apply_local(x_of_alpha(v.dim, v.site_alphas[static_cast<std::size_t>(site - 1)]), site, out);
  }
  const Complex phase = omega_power(v.dim, v.global_phase_exp);
  for (std::int64_t i = 0; i < out.size(); ++i) out[i] *= phase;
  return out;
}

EigenstateReport verify_common_eigenstate(std::span<const CompositeObservable> set,
                                          const StateVector& s, double tol) {
  EigenstateReport report;
  report.tolerance = tol;
  report.residuals.reserve(set.size());
  for (const CompositeObservable& v : set) {
    StateVector image = apply_composite(v, s);
    double sq = 0.0;
    for (std::int64_t i = 0; i < image.size(); ++i) sq += std::norm(image[i] - s[i]);
    report.residuals.push_back(std::sqrt(sq));
  }
  report.max_residual = 0.0;
  for (double r : report.residuals) report.max_residual = std::max(report.max_residual, r);
  report.pass = report.max_residual <= tol;
  return report;
}

JointDistribution::JointDistribution(int parties, int dim, std::vector<double> probs)
    : parties_(parties), dim_(dim), probs_(std::move(probs)) {
  std::int64_t expected = 1;
  for (int k = 0; k < parties; ++k) expected *= dim;
  if (static_cast<std::int64_t>(probs_.size()) != expected)
    throw std::invalid_argument("JointDistribution: table length != D^N");
}

double JointDistribution::prob(std::span<const int> outcome) const {
  if (static_cast<int>(outcome.size()) != parties_)
    throw std::invalid_argument("JointDistribution::prob: outcome length != parties");
  return probs_[static_cast<std::size_t>(index_of_digits(outcome, dim_))];
}

double JointDistribution::sum() const {
  // Kahan compensation keeps the error independent of the table length,
  // which can reach the amplitude bound.
  double total = 0.0;
  double carry = 0.0;
  for (double p : probs_) {
    const double y = p - carry;
    const double t = total + y;
    carry = (t - total) - y;
    total = t;
  }
  return total;
}

JointDistribution joint_distribution(const MeasurementSetting& setting, const StateVector& s) {
  if (static_cast<int>(setting.alphas.size()) != s.parties())
    throw std::invalid_argument("joint_distribution: setting length != parties");
  const int dim = s.dim();

  // Rotate into the product eigenbasis: coefficient of outcome m is
  // <m_1|_a1 ⊗ ... ⊗ <m_N|_aN |s>, i.e. apply B_k^dag per site where the
  // columns of B_k are the X(alpha_k) eigenvectors.
  StateVector rotated = s;
  for (int site = 1; site <= s.parties(); ++site) {
    const Rational& alpha = setting.alphas[static_cast<std::size_t>(site - 1)];
    LocalMatrix basis(dim);
    for (int m = 0; m < dim; ++m) {
      const StateVector col = eigenvector(dim, alpha, m);
      for (int j = 0; j < dim; ++j) basis(j, m) = col[j];
    }
    rotated = apply_local(basis.adjoint(), site, rotated);
  }

  std::vector<double> probs(static_cast<std::size_t>(rotated.size()));
  for (std::int64_t i = 0; i < rotated.size(); ++i) probs[static_cast<std::size_t>(i)] = std::norm(rotated[i]);

  JointDistribution dist(s.parties(), dim, std::move(probs));
  const double total = dist.sum();
  if (std::abs(total - 1.0) > 1e-10)
    throw ConsistencyError("joint_distribution: probabilities sum to " + std::to_string(total));
  return dist;
}

Complex correlation_function(const MeasurementSetting& setting, const Rational& phase_exp,
                             const StateVector& s) {
  CompositeObservable v;
  v.parties = s.parties();
  v.dim = s.dim();
  v.global_phase_exp = phase_exp;
  v.site_alphas = setting.alphas;
  const Complex direct = inner_product(s, apply_composite(v, s));

  // Independent route: sum_m omega^(sum_k m_k + c) P(m).
  const JointDistribution dist = joint_distribution(setting, s);
  Complex from_dist{0.0, 0.0};
  for (std::int64_t i = 0; i < dist.size(); ++i) {
    const double p = dist.prob_at(i);
    if (p == 0.0) continue;
    const std::vector<int> m = digits_of_index(i, dist.parties(), dist.dim());
    std::int64_t outcome_sum = 0;
    for (int mk : m) outcome_sum += mk;
    from_dist += p * omega_power(dist.dim(), Rational(outcome_sum) + phase_exp);
  }
  if (std::abs(direct - from_dist) > 1e-10)
    throw ConsistencyError("correlation_function: operator and distribution routes disagree");
  return direct;
}

std::optional<int> perfect_correlation_offset(const JointDistribution& dist) {
  constexpr double kSupportThreshold = 1e-10;
  const int dim = dist.dim();
  int offset = -1;
  for (std::int64_t i = 0; i < dist.size(); ++i) {
    if (dist.prob_at(i) <= kSupportThreshold) continue;
    const std::vector<int> m = digits_of_index(i, dist.parties(), dim);
    std::int64_t s = 0;
    for (int mk : m) s += mk;
    const int residue = static_cast<int>(s % dim);
    if (offset < 0) {
      offset = residue;
    } else if (offset != residue) {
      return std::nullopt;
    }
  }
  if (offset < 0) return std::nullopt;  // empty support
  return offset;
}

} // namespace ghzq
