#include "invdesc/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace invdesc {

const Nat& require_nonnegative(const Int& value, const char* what) {
  if (sgn(value) < 0) {
    throw std::logic_error(std::string("negative value for ") + what + ": " + value.get_str());
  }
  return value;
}

Nat binom(std::int64_t n, std::int64_t k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  Nat result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Nat multiset_coeff(std::uint64_t m, std::uint64_t j) {
  if (m == 0) return j == 0 ? 1 : 0;
  return binom(static_cast<std::int64_t>(m + j - 1), static_cast<std::int64_t>(j));
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, Int coeff) {
  std::vector<Int> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(std::size_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : Int(0);
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Int& c = coeffs_[e];
    if (sgn(c) == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int> c(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) c[i] += q.coeffs()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int> c(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) c[i] -= q.coeffs()[i];
  return IntPolynomial(std::move(c));
}

namespace {

std::vector<Int> mul_upto(const std::vector<Int>& a, const std::vector<Int>& b,
                          std::size_t max_len) {
  if (a.empty() || b.empty()) return {};
  std::size_t len = std::min(a.size() + b.size() - 1, max_len);
  std::vector<Int> c(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

}  // namespace

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  return IntPolynomial(mul_upto(p.coeffs(), q.coeffs(), p.coeffs().size() + q.coeffs().size()));
}

IntPolynomial series_product_trunc(const IntPolynomial& p, const IntPolynomial& q,
                                   std::size_t order) {
  return IntPolynomial(mul_upto(p.coeffs(), q.coeffs(), order + 1));
}

IntPolynomial geometric_pow_series(std::uint64_t m, std::uint64_t step, std::size_t order) {
  if (step == 0) throw std::invalid_argument("geometric_pow_series: step must be positive");
  std::vector<Int> c(order + 1);
  for (std::uint64_t j = 0; j * step <= order; ++j) {
    c[j * step] = multiset_coeff(m, j);
  }
  return IntPolynomial(std::move(c));
}

std::string to_decimal(const Int& value) { return value.get_str(10); }

}  // namespace invdesc
