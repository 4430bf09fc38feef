#include "invdesc/symfunc.hpp"

#include <stdexcept>

namespace invdesc {

void SparsePolynomial::add_term(const Exponents& exponents, const Nat& coeff) {
  if (exponents.size() != variables_) throw std::invalid_argument("exponent vector has wrong length");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Nat SparsePolynomial::evaluate_at_ones() const {
  Nat total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str();
    for (std::size_t v = 0; v < it->first.size(); ++v) {
      const auto power = it->first[v];
      if (power == 0) continue;
      out += "*x" + std::to_string(v + 1);
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

SparsePolynomial schur_via_ssyt(const Shape& lambda, std::size_t m, const OracleBounds& bounds) {
  SparsePolynomial out(m);
  for (const auto& t : enumerate_ssyt_of_shape(lambda, m, bounds)) {
    Exponents e(m, 0);
    for (const auto& row : t.rows()) {
      for (Letter v : row) ++e[v - 1];
    }
    out.add_term(e);
  }
  return out;
}

SparsePolynomial fundamental_quasisym(const YamanouchiWord& y, std::size_t m,
                                      const OracleBounds& bounds) {
  check_bound(y.size(), bounds.shape_n, "word length");
  check_bound(m, bounds.shape_m, "variable count");
  SparsePolynomial out(m);
  const std::size_t n = y.size();
  std::vector<bool> strict(n + 1, false);
  for (std::size_t pos : weak_descent_set(y)) strict[pos] = true;

  Exponents e(m, 0);
  // chain[j] = i_{j+1}; walk every admissible index chain.
  auto extend = [&](auto&& self, std::size_t j, std::size_t prev) -> void {
    if (j == n) {
      out.add_term(e);
      return;
    }
    std::size_t lo = j == 0 ? 1 : prev + (strict[j] ? 1 : 0);
    for (std::size_t i = lo; i <= m; ++i) {
      ++e[i - 1];
      self(self, j + 1, i);
      --e[i - 1];
    }
  };
  extend(extend, 0, 0);
  return out;
}

std::vector<YamanouchiWord> yamanouchi_words_of_shape(const Shape& lambda, const OracleBounds& bounds) {
  std::vector<YamanouchiWord> out;
  for (const auto& t : enumerate_standard(lambda, bounds)) out.push_back(chi(t));
  return out;
}

bool verify_schur_identity(const Shape& lambda, std::size_t m, const OracleBounds& bounds) {
  check_bound(lambda.size(), bounds.shape_n, "shape size");
  check_bound(m, bounds.shape_m, "variable count");
  SparsePolynomial sum(m);
  for (const auto& y : yamanouchi_words_of_shape(lambda, bounds)) sum += fundamental_quasisym(y, m, bounds);
  return schur_via_ssyt(lambda, m, bounds) == sum;
}

}  // namespace invdesc
