#ifndef GHZQ_OBSERVABLES_HPP
#define GHZQ_OBSERVABLES_HPP

#include "ghzq/qudit_algebra.hpp"

namespace ghzq {

/*
 * The single-qudit observable family
 *
 *   X(alpha) = omega^(-alpha) ( sum_{n=0}^{D-2} |n><n+1|  +  omega^(alpha D) |D-1><0| )
 *
 * with rational alpha. X(0) is the cyclic shift, X(alpha + j) = omega^(-j) X(alpha)
 * for integer j, and the eigenvector for eigenvalue omega^n is
 * |n>_alpha = (1/sqrt(D)) sum_m omega^((n+alpha) m) |m>.
 */

LocalMatrix x_of_alpha(int dim, const Rational& alpha);

/// Eigenvector of X(alpha) with eigenvalue omega^n, as a 1-party state.
StateVector eigenvector(int dim, const Rational& alpha, int n);

/// |<n_alpha | m_beta>|^2, evaluated by the closed form
///   sin^2(pi xi) / (D^2 sin^2(pi xi / D)),   xi = m - n + beta - alpha,
/// with the exact Kronecker-comb branch for integer xi (1 when xi = 0 mod D,
/// else 0). The direct eigenvector inner product is recomputed alongside and
/// a ConsistencyError is raised if the routes differ by more than 1e-10.
double overlap_sq(int dim, int n, const Rational& alpha, int m, const Rational& beta);

/// True iff X(alpha) and X(beta) are the same observable up to a phase
/// factor, i.e. beta - alpha is an integer (exact test).
bool equivalent(const Rational& alpha, const Rational& beta);

/// alpha split as reduced + absorbed with reduced in [0, 1) and absorbed an
/// integer; X(alpha) = omega^(-absorbed) X(reduced).
struct AlphaNormalization {
  Rational reduced;
  std::int64_t absorbed;
};
AlphaNormalization normalize_alpha(const Rational& alpha);

/// alpha bundled with its dimension. Unitary by construction; eigenvalues
/// are the D-th roots of unity.
struct LocalObservable {
  int dim;
  Rational alpha;

  LocalMatrix matrix() const { return x_of_alpha(dim, alpha); }
  StateVector eigenstate(int n) const { return eigenvector(dim, alpha, n); }
};

} // namespace ghzq

#endif
