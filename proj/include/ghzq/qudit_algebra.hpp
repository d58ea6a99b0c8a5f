#ifndef GHZQ_QUDIT_ALGEBRA_HPP
#define GHZQ_QUDIT_ALGEBRA_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzq/rational.hpp"

namespace ghzq {

using Complex = std::complex<double>;

inline constexpr std::int64_t kDefaultAmpBound = 10'000'000;

/// Checked integer power base^exp. Throws ResourceLimitError when the result
/// would exceed `limit` (or overflow int64).
std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t limit);

/*
 * Joint-state indexing convention, fixed globally and echoed in every JSON
 * report: amplitudes are ordered by the mixed-radix number
 *
 *   index(m_1, ..., m_N) = sum_k m_k * D^(N-k)
 *
 * so party 1 is the most significant digit and party N the least.
 */
std::int64_t index_of_digits(std::span<const int> digits, int dim);
std::vector<int> digits_of_index(std::int64_t index, int parties, int dim);

/// Dense complex vector over N qudits of local dimension D (length D^N).
class StateVector {
public:
  StateVector(int parties, int dim);  // zero vector

  static StateVector basis_state(int parties, int dim, std::span<const int> digits);

  int parties() const { return parties_; }
  int dim() const { return dim_; }
  std::int64_t size() const { return static_cast<std::int64_t>(amps_.size()); }

  Complex& operator[](std::int64_t i) { return amps_[static_cast<std::size_t>(i)]; }
  const Complex& operator[](std::int64_t i) const { return amps_[static_cast<std::size_t>(i)]; }

  std::vector<Complex>& amplitudes() { return amps_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const;

private:
  int parties_;
  int dim_;
  std::vector<Complex> amps_;
};

/// D x D complex matrix acting on one qudit (row-major).
class LocalMatrix {
public:
  explicit LocalMatrix(int dim);  // zero matrix
  static LocalMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
  const Complex& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  LocalMatrix adjoint() const;
  LocalMatrix operator*(const LocalMatrix& rhs) const;

  /// max_ij |(M^dag M - I)_ij|
  double unitarity_defect() const;

private:
  int dim_;
  std::vector<Complex> entries_;
};

/// Linear phase function f(n) = coefficient * n, so f(0) = 0 by construction.
struct PhaseFunction {
  Rational coefficient;

  Rational operator()(std::int64_t n) const { return coefficient * Rational(n); }
};

/// exp(2*pi*i * c / dim), the c-th power of the principal dim-th root of
/// unity, with rational c evaluated exactly before the single trig call.
Complex omega_power(int dim, const Rational& c);

/// Quantum Fourier matrix: entry (m, n) = omega^(m n) / sqrt(D).
LocalMatrix fourier_matrix(int dim);

/// Diagonal phase shifter: diag(omega^f(0), ..., omega^f(D-1)).
LocalMatrix phase_shifter(int dim, const PhaseFunction& f);

/// Applies M to the qudit at `site` (1-based) of s, i.e. multiplies by
/// I ⊗ ... ⊗ M ⊗ ... ⊗ I without materializing the D^N x D^N matrix.
StateVector apply_local(const LocalMatrix& m, int site, const StateVector& s);

/// <a|b>, conjugating the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

} // namespace ghzq

#endif
