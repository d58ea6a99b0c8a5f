#include "ghzq/lhv_engine.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ghzq/errors.hpp"

namespace ghzq {

bool satisfies(const LhvAssignment& a, const CorrelationConstraint& c, int dim) {
  const int parties = static_cast<int>(c.labels.size());
  if (static_cast<int>(a.x.size()) != parties || static_cast<int>(a.y.size()) != parties)
    throw std::invalid_argument("satisfies: assignment/constraint length mismatch");
  std::int64_t sum = 0;
  for (int k = 0; k < parties; ++k)
    sum += (c.labels[static_cast<std::size_t>(k)] == SettingLabel::X) ? a.x[static_cast<std::size_t>(k)]
                                                                      : a.y[static_cast<std::size_t>(k)];
  return sum % dim == c.offset;
}

std::vector<CorrelationConstraint> cyclic_constraints(int parties, int dim, int n1, int n2) {
  if (parties < 2 || dim < 2) throw std::invalid_argument("cyclic_constraints: parties >= 2, dim >= 2");
  if (n1 < 1 || n2 < 1 || n1 + n2 != parties)
    throw std::invalid_argument("cyclic_constraints: need N1 >= 1, N2 >= 1, N1 + N2 = N");

  std::vector<CorrelationConstraint> constraints;
  constraints.reserve(static_cast<std::size_t>(parties) + 1);

  CorrelationConstraint all_x;
  all_x.labels.assign(static_cast<std::size_t>(parties), SettingLabel::X);
  all_x.offset = 0;
  constraints.push_back(std::move(all_x));

  for (int l = 1; l <= parties; ++l) {
    CorrelationConstraint c;
    c.labels.assign(static_cast<std::size_t>(parties), SettingLabel::Y);
    for (int t = 0; t < n1; ++t) c.labels[static_cast<std::size_t>((l - 1 + t) % parties)] = SettingLabel::X;
    c.offset = dim - 1;  // -1 mod D
    constraints.push_back(std::move(c));
  }
  return constraints;
}

std::vector<CorrelationConstraint> constraints_from_params(const ConstructionParams& p) {
  p.validate();
  return cyclic_constraints(p.parties, p.dim, p.n1, p.n2);
}

namespace {

// D^(2N) clamped to int64 max, for reporting and bound checks.
std::int64_t saturating_space_size(int dim, int parties) {
  std::int64_t space = 1;
  for (int i = 0; i < 2 * parties; ++i) {
    if (space > std::numeric_limits<std::int64_t>::max() / dim)
      return std::numeric_limits<std::int64_t>::max();
    space *= dim;
  }
  return space;
}

// Odometer step in lexicographic order: increments the least significant
// digit, carrying left; returns false once the vector wraps past the end.
bool advance(std::vector<int>& digits, int dim) {
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    if (++digits[static_cast<std::size_t>(k)] < dim) return true;
    digits[static_cast<std::size_t>(k)] = 0;
  }
  return false;
}

} // namespace

std::optional<LhvAssignment> brute_force_search(std::span<const CorrelationConstraint> constraints,
                                                int parties, int dim, std::int64_t bound) {
  if (parties < 1 || dim < 2) throw std::invalid_argument("brute_force_search: parties >= 1, dim >= 2");
  for (const CorrelationConstraint& c : constraints) {
    if (static_cast<int>(c.labels.size()) != parties)
      throw std::invalid_argument("brute_force_search: constraint length != parties");
    if (c.offset < 0 || c.offset >= dim)
      throw std::invalid_argument("brute_force_search: offset out of Z_D");
  }
  const std::int64_t space = saturating_space_size(dim, parties);
  if (space > bound)
    throw ResourceLimitError("brute_force_search: space " + std::to_string(space) +
                             " exceeds bound " + std::to_string(bound));

  // Party index lists per constraint; constraints whose Y-part is empty are
  // decided as soon as x is fixed.
  const int ncons = static_cast<int>(constraints.size());
  std::vector<std::vector<int>> x_parties(static_cast<std::size_t>(ncons));
  std::vector<std::vector<int>> y_parties(static_cast<std::size_t>(ncons));
  for (int i = 0; i < ncons; ++i) {
    for (int k = 0; k < parties; ++k) {
      if (constraints[static_cast<std::size_t>(i)].labels[static_cast<std::size_t>(k)] == SettingLabel::X)
        x_parties[static_cast<std::size_t>(i)].push_back(k);
      else
        y_parties[static_cast<std::size_t>(i)].push_back(k);
    }
  }

  std::vector<int> x(static_cast<std::size_t>(parties), 0);
  std::vector<int> y(static_cast<std::size_t>(parties), 0);
  std::vector<int> needed(static_cast<std::size_t>(ncons), 0);

  do {
    // Residue each constraint still needs from its Y block given this x.
    bool feasible = true;
    for (int i = 0; i < ncons && feasible; ++i) {
      std::int64_t xsum = 0;
      for (int k : x_parties[static_cast<std::size_t>(i)]) xsum += x[static_cast<std::size_t>(k)];
      const int r = static_cast<int>(((constraints[static_cast<std::size_t>(i)].offset - xsum) % dim + dim) % dim);
      needed[static_cast<std::size_t>(i)] = r;
      if (y_parties[static_cast<std::size_t>(i)].empty() && r != 0) feasible = false;
    }
    if (!feasible) continue;

    std::fill(y.begin(), y.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < ncons && ok; ++i) {
        if (y_parties[static_cast<std::size_t>(i)].empty()) continue;
        std::int64_t ysum = 0;
        for (int k : y_parties[static_cast<std::size_t>(i)]) ysum += y[static_cast<std::size_t>(k)];
        ok = (ysum % dim) == needed[static_cast<std::size_t>(i)];
      }
      if (ok) return LhvAssignment{x, y};
    } while (advance(y, dim));
  } while (advance(x, dim));

  return std::nullopt;
}

AnalyticWitness analytic_solvable(int parties, int dim, int n2) {
  if (n2 < 1 || n2 > parties - 1)
    throw std::invalid_argument("analytic_solvable: need 1 <= N2 <= N-1");
  if (dim < 2) throw std::invalid_argument("analytic_solvable: dim >= 2 required");
  AnalyticWitness w;
  w.gcd_value = std::gcd(static_cast<std::int64_t>(n2), static_cast<std::int64_t>(dim));
  // N2*y + N = 0 (mod D) has a solution in y iff gcd(N2, D) divides N.
  w.divides_parties = (parties % w.gcd_value) == 0;
  return w;
}

ContradictionCertificate certify(const ConstructionParams& p, const CertifyOptions& opt) {
  p.validate();

  const GhzState state = ghz_state(p.parties, p.dim, opt.amp_bound);
  const std::vector<CompositeObservable> set = build_concurrent_set(p);
  const EigenstateReport quantum = verify_common_eigenstate(set, state.vector, opt.tolerance);

  const std::vector<CorrelationConstraint> constraints = constraints_from_params(p);

  ContradictionCertificate cert;
  cert.params = p;
  cert.quantum_residuals = quantum.residuals;
  cert.quantum_max_residual = quantum.max_residual;
  cert.tolerance = opt.tolerance;

  cert.lhv_search.space_size = saturating_space_size(p.dim, p.parties);
  if (cert.lhv_search.space_size <= opt.lhv_bound) {
    cert.lhv_search.searched = true;
    cert.lhv_search.satisfying = brute_force_search(constraints, p.parties, p.dim, opt.lhv_bound);
  } else if (opt.analytic_fallback) {
    cert.lhv_search.searched = false;
  } else {
    throw ResourceLimitError("certify: LHV space " + std::to_string(cert.lhv_search.space_size) +
                             " exceeds bound " + std::to_string(opt.lhv_bound));
  }

  cert.analytic = analytic_solvable(p.parties, p.dim, p.n2);

  if (cert.lhv_search.searched &&
      cert.lhv_search.satisfying.has_value() != cert.analytic.divides_parties) {
    throw ConsistencyError("certify: brute-force search and gcd criterion disagree for N=" +
                           std::to_string(p.parties) + " D=" + std::to_string(p.dim) +
                           " N2=" + std::to_string(p.n2));
  }
  if (cert.lhv_search.satisfying.has_value()) {
    for (const CorrelationConstraint& c : constraints) {
      if (!satisfies(*cert.lhv_search.satisfying, c, p.dim))
        throw ConsistencyError("certify: reported LHV assignment violates a constraint");
    }
  }

  cert.contradiction = quantum.pass && !cert.analytic.divides_parties &&
                       !cert.lhv_search.satisfying.has_value();
  return cert;
}

} // namespace ghzq
