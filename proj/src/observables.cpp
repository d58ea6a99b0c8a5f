#include "ghzq/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ghzq/errors.hpp"

namespace ghzq {

LocalMatrix x_of_alpha(int dim, const Rational& alpha) {
  if (dim < 2) throw std::invalid_argument("x_of_alpha: dim >= 2 required");
  LocalMatrix m(dim);
  const Complex shift = omega_power(dim, -alpha);
  for (int n = 0; n + 1 < dim; ++n) m(n, n + 1) = shift;
  // omega^(-alpha) * omega^(alpha D) = omega^(alpha (D-1))
  m(dim - 1, 0) = omega_power(dim, alpha * Rational(dim - 1));
  return m;
}

StateVector eigenvector(int dim, const Rational& alpha, int n) {
  if (dim < 2) throw std::invalid_argument("eigenvector: dim >= 2 required");
  if (n < 0 || n >= dim) throw std::invalid_argument("eigenvector: n out of range");
  StateVector v(1, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const Rational level = Rational(n) + alpha;
  for (int m = 0; m < dim; ++m) v[m] = scale * omega_power(dim, level * Rational(m));
  return v;
}

double overlap_sq(int dim, int n, const Rational& alpha, int m, const Rational& beta) {
  if (n < 0 || n >= dim || m < 0 || m >= dim)
    throw std::invalid_argument("overlap_sq: level index out of range");
  const Rational xi = Rational(m - n) + beta - alpha;

  double closed = 0.0;
  if (is_integer(xi)) {
    closed = congruent_zero_mod_dim(xi, dim) ? 1.0 : 0.0;
  } else {
    // sin^2(pi xi) / (D^2 sin^2(pi xi / D)); both factors have period D in xi.
    const double x = to_double(rational_mod(xi, dim));
    const double num = std::sin(std::numbers::pi * x);
    const double den = static_cast<double>(dim) * std::sin(std::numbers::pi * x / dim);
    closed = (num * num) / (den * den);
  }

  const Complex ip = inner_product(eigenvector(dim, alpha, n), eigenvector(dim, beta, m));
  const double direct = std::norm(ip);
  if (std::abs(closed - direct) > 1e-10) {
    throw ConsistencyError("overlap_sq: closed form and direct inner product disagree: " +
                           std::to_string(closed) + " vs " + std::to_string(direct));
  }
  return closed;
}

bool equivalent(const Rational& alpha, const Rational& beta) { return is_integer(beta - alpha); }

AlphaNormalization normalize_alpha(const Rational& alpha) {
  const std::int64_t absorbed = rational_floor(alpha);
  return AlphaNormalization{alpha - Rational(absorbed), absorbed};
}

} // namespace ghzq
