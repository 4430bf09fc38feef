#pragma once

// Exact integer arithmetic shared by every counting routine: big integers,
// binomial and multiset coefficients, dense univariate polynomials and
// truncated power series.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace invdesc {

/// Signed arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision integer that is nonnegative by contract. Values that
/// land in a count table are checked with require_nonnegative().
using Nat = mpz_class;

/// Throws std::logic_error if `value` is negative. `what` names the quantity.
const Nat& require_nonnegative(const Int& value, const char* what);

/// Binomial coefficient with the total convention used throughout:
/// binom(n, 0) = 1 for every n (negative n included), otherwise 0 whenever
/// k < 0, n < 0 or k > n.
Nat binom(std::int64_t n, std::int64_t k);

/// Number of multisets of size j drawn from m types, binom(m + j - 1, j).
/// multiset_coeff(0, 0) = 1 and multiset_coeff(0, j) = 0 for j > 0.
Nat multiset_coeff(std::uint64_t m, std::uint64_t j);

/// Dense univariate polynomial with exact integer coefficients.
/// coeffs()[e] is the coefficient of x^e; the highest stored coefficient is
/// nonzero, so the zero polynomial has no coefficients at all.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t exponent, Int coeff = 1);

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^e (zero beyond the degree).
  Int coeff(std::size_t e) const;

  /// Canonical text such as "1 + 2*x - 3*x^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void normalize();
  std::vector<Int> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);

/// Exact schoolbook product.
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/// (p * q) mod x^(order + 1).
IntPolynomial series_product_trunc(const IntPolynomial& p, const IntPolynomial& q,
                                   std::size_t order);

/// Expansion of 1/(1 - x^step)^m up to and including degree `order`:
/// sum_j multiset_coeff(m, j) x^(step*j). Throws std::invalid_argument when
/// step is zero.
IntPolynomial geometric_pow_series(std::uint64_t m, std::uint64_t step, std::size_t order);

/// Decimal rendering of a big integer.
std::string to_decimal(const Int& value);

}  // namespace invdesc
