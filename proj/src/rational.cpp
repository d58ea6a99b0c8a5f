#include "ghzq/rational.hpp"

namespace ghzq {

std::int64_t rational_floor(const Rational& r) {
  const std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();  // > 0
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Rational rational_mod(const Rational& r, std::int64_t m) {
  const Rational scaled = r / Rational(m);
  return r - Rational(rational_floor(scaled)) * Rational(m);
}

bool congruent_zero_mod_dim(const Rational& r, std::int64_t dim) {
  // r/dim integral <=> denominator 1 and numerator divisible by dim,
  // since r is stored normalized.
  return r.denominator() == 1 && r.numerator() % dim == 0;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace ghzq
