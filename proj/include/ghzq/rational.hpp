#ifndef GHZQ_RATIONAL_HPP
#define GHZQ_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace ghzq {

// Exact fraction type carrying every phase exponent in the library (alpha,
// beta, xi, gamma, phase-function coefficients, constraint offsets).
// Equivalence and invariance decisions are made on these values only;
// doubles appear when a matrix or state is materialized, never before.
using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Largest integer <= r.
std::int64_t rational_floor(const Rational& r);

/// r reduced into [0, m) by subtracting integer multiples of m (m >= 1).
Rational rational_mod(const Rational& r, std::int64_t m);

/// True iff r is congruent to zero modulo `dim` in the extended sense
/// used for phase exponents: omega^r = 1 with omega = exp(2*pi*i/dim),
/// i.e. r/dim is an integer.
bool congruent_zero_mod_dim(const Rational& r, std::int64_t dim);

double to_double(const Rational& r);

/// "p/q", or just "p" when the value is an integer.
std::string to_string(const Rational& r);

} // namespace ghzq

#endif
