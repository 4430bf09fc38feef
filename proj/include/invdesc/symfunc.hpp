#pragma once

// Schur polynomials and fundamental quasisymmetric polynomials in m
// variables, under the row-strict tableau convention and weak descents,
// and the check that the former is the sum of the latter over Y(lambda).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invdesc/arith.hpp"
#include "invdesc/bounds.hpp"
#include "invdesc/tableaux.hpp"
#include "invdesc/words.hpp"

namespace invdesc {

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in x_1..x_m with nonnegative integer coefficients.
/// No zero coefficient is ever stored.
class SparsePolynomial {
public:
  explicit SparsePolynomial(std::size_t variable_count) : variables_(variable_count) {}

  std::size_t variable_count() const noexcept { return variables_; }
  const std::map<Exponents, Nat>& terms() const noexcept { return terms_; }

  /// Adds coeff * x^exponents. Throws std::invalid_argument on a length
  /// mismatch.
  void add_term(const Exponents& exponents, const Nat& coeff = 1);
  SparsePolynomial& operator+=(const SparsePolynomial& other);

  /// Sum of all coefficients (every variable set to 1).
  Nat evaluate_at_ones() const;

  /// Monomials in decreasing lexicographic order of exponent vectors, each
  /// with an explicit coefficient: "1*x1^2*x2 + 1*x1*x2^2". "0" when empty.
  std::string to_string() const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
  std::size_t variables_;
  std::map<Exponents, Nat> terms_;
};

/// Sum over semistandard fillings S of lambda with entries in [1, m] of
/// x^content(S).
SparsePolynomial schur_via_ssyt(const Shape& lambda, std::size_t m, const OracleBounds& bounds = {});

/// Sum of x_{i_1} ... x_{i_n} over 1 <= i_1 <= ... <= i_n <= m with
/// i_j < i_{j+1} whenever j is a weak descent of y.
SparsePolynomial fundamental_quasisym(const YamanouchiWord& y, std::size_t m,
                                      const OracleBounds& bounds = {});

/// { chi(T) : T standard of shape lambda }.
std::vector<YamanouchiWord> yamanouchi_words_of_shape(const Shape& lambda, const OracleBounds& bounds = {});

/// schur_via_ssyt(lambda, m) == sum_{y in Y(lambda)} fundamental_quasisym(y, m).
bool verify_schur_identity(const Shape& lambda, std::size_t m, const OracleBounds& bounds = {});

}  // namespace invdesc
