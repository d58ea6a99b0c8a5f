#include "ghzq/qudit_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ghzq/errors.hpp"

namespace ghzq {

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t limit) {
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > limit / base) {
      throw ResourceLimitError(std::to_string(base) + "^" + std::to_string(exp) +
                               " exceeds bound " + std::to_string(limit));
    }
    result *= base;
  }
  return result;
}

std::int64_t index_of_digits(std::span<const int> digits, int dim) {
  std::int64_t index = 0;
  for (int d : digits) index = index * dim + d;
  return index;
}

std::vector<int> digits_of_index(std::int64_t index, int parties, int dim) {
  std::vector<int> digits(static_cast<std::size_t>(parties));
  for (int k = parties - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(index % dim);
    index /= dim;
  }
  return digits;
}

namespace {
// Hard technical cap, well past any configurable bound; guards the index
// arithmetic against overflow rather than expressing a resource policy.
constexpr std::int64_t kHardAmpCap = 1'000'000'000;
} // namespace

StateVector::StateVector(int parties, int dim) : parties_(parties), dim_(dim) {
  if (parties < 1 || dim < 2) throw std::invalid_argument("StateVector: need parties >= 1, dim >= 2");
  const std::int64_t n = checked_pow(dim, parties, kHardAmpCap);
  amps_.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
}

StateVector StateVector::basis_state(int parties, int dim, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != parties)
    throw std::invalid_argument("basis_state: digit count != parties");
  for (int d : digits) {
    if (d < 0 || d >= dim) throw std::invalid_argument("basis_state: digit out of range");
  }
  StateVector s(parties, dim);
  s[index_of_digits(digits, dim)] = Complex{1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const Complex& a : amps_) sq += std::norm(a);
  return std::sqrt(sq);
}

LocalMatrix::LocalMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("LocalMatrix: dim >= 1 required");
  entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

LocalMatrix LocalMatrix::identity(int dim) {
  LocalMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

LocalMatrix LocalMatrix::adjoint() const {
  LocalMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("LocalMatrix product: dimension mismatch");
  LocalMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (int c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double LocalMatrix::unitarity_defect() const {
  const LocalMatrix prod = adjoint() * (*this);
  double defect = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      defect = std::max(defect, std::abs(prod(r, c) - expected));
    }
  }
  return defect;
}

Complex omega_power(int dim, const Rational& c) {
  if (dim < 2) throw std::invalid_argument("omega_power: dim >= 2 required");
  // Reduce the exponent into [0, dim) first; omega^c has period dim in c.
  const Rational reduced = rational_mod(c, dim);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced.numerator()) /
                       (static_cast<double>(reduced.denominator()) * static_cast<double>(dim));
  return std::polar(1.0, angle);
}

LocalMatrix fourier_matrix(int dim) {
  if (dim < 2) throw std::invalid_argument("fourier_matrix: dim >= 2 required");
  LocalMatrix f(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n)
      f(m, n) = scale * omega_power(dim, Rational(static_cast<std::int64_t>(m) * n));
  return f;
}

LocalMatrix phase_shifter(int dim, const PhaseFunction& f) {
  if (dim < 2) throw std::invalid_argument("phase_shifter: dim >= 2 required");
  LocalMatrix p(dim);
  for (int n = 0; n < dim; ++n) p(n, n) = omega_power(dim, f(n));
  return p;
}

StateVector apply_local(const LocalMatrix& m, int site, const StateVector& s) {
  const int dim = s.dim();
  const int parties = s.parties();
  if (m.dim() != dim) throw std::invalid_argument("apply_local: matrix/state dimension mismatch");
  if (site < 1 || site > parties) throw std::invalid_argument("apply_local: site out of range");

  // Party `site` strides by dim^(parties - site) under the global indexing.
  std::int64_t stride = 1;
  for (int k = 0; k < parties - site; ++k) stride *= dim;
  const std::int64_t block = stride * dim;
  const std::int64_t total = s.size();

  StateVector out(parties, dim);
  std::vector<Complex> column(static_cast<std::size_t>(dim));
  for (std::int64_t base = 0; base < total; base += block) {
    for (std::int64_t off = 0; off < stride; ++off) {
      const std::int64_t p = base + off;
      for (int n = 0; n < dim; ++n) column[static_cast<std::size_t>(n)] = s[p + n * stride];
      for (int r = 0; r < dim; ++r) {
        Complex acc{0.0, 0.0};
        for (int n = 0; n < dim; ++n) acc += m(r, n) * column[static_cast<std::size_t>(n)];
        out[p + r * stride] = acc;
      }
    }
  }
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.parties() != b.parties() || a.dim() != b.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  Complex acc{0.0, 0.0};
  for (std::int64_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

} // namespace ghzq
