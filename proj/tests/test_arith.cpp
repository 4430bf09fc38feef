#include <random>

#include "doctest.h"
#include "invdesc/arith.hpp"

using namespace invdesc;

TEST_CASE("binom edge cases") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 1);
  CHECK(binom(-3, 0) == 1);
  CHECK(binom(-1, 1) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(100, 50) == Nat("100891344545564193334812497256"));
}

TEST_CASE("Pascal rule") {
  for (int n = 1; n <= 60; ++n) {
    for (int k = 1; k <= n; ++k) {
      REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
  }
}

TEST_CASE("multiset coefficients") {
  CHECK(multiset_coeff(3, 2) == 6);
  CHECK(multiset_coeff(0, 4) == 0);
  CHECK(multiset_coeff(0, 0) == 1);
  CHECK(multiset_coeff(1, 7) == 1);
  for (std::uint64_t m = 1; m < 20; ++m)
    for (std::uint64_t j = 0; j < 20; ++j)
      REQUIRE(multiset_coeff(m, j) == binom(static_cast<std::int64_t>(m + j - 1), static_cast<std::int64_t>(j)));
}

TEST_CASE("polynomial products") {
  CHECK(poly_mul({1, 1}, {1, -1}) == IntPolynomial{1, 0, -1});
  CHECK(poly_mul({1, 1, 1}, {1, 1}) == IntPolynomial{1, 2, 2, 1});
  IntPolynomial p{3, 0, -2, 5};
  CHECK(poly_mul(p, {1}) == p);
  CHECK(poly_mul(p, {}).is_zero());
  CHECK(series_product_trunc({1, 1}, {1, 1}, 1) == IntPolynomial{1, 2});
  CHECK(series_product_trunc(p, {}, 5).is_zero());
}

TEST_CASE("normalization and printing") {
  IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p.coeff(7) == 0);
  CHECK(IntPolynomial{1, 2, -3}.to_string() == "1 + 2*x - 3*x^2");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK((IntPolynomial{1, 1} - IntPolynomial{1, 1}).is_zero());
  CHECK(IntPolynomial::monomial(3, 4) == IntPolynomial{0, 0, 0, 4});
}

TEST_CASE("geometric power series") {
  CHECK(geometric_pow_series(2, 1, 3) == IntPolynomial{1, 2, 3, 4});
  CHECK(geometric_pow_series(1, 2, 5) == IntPolynomial{1, 0, 1, 0, 1});
  CHECK(geometric_pow_series(0, 1, 3) == IntPolynomial{1});
  CHECK_THROWS_AS(geometric_pow_series(1, 0, 3), std::invalid_argument);
  const IntPolynomial sq = poly_mul({1, -1}, {1, -1});
  CHECK(series_product_trunc(geometric_pow_series(2, 1, 4), sq, 4) == IntPolynomial{1});
}

TEST_CASE("geometric series inverts (1 - x^step)^m") {
  for (std::uint64_t step = 1; step <= 3; ++step) {
    IntPolynomial base{1};
    for (std::uint64_t m = 0; m <= 60; m += 7) {
      IntPolynomial factor{1};
      for (std::uint64_t i = 0; i < m; ++i) factor = poly_mul(factor, IntPolynomial{1} - IntPolynomial::monomial(step));
      const std::size_t order = 200;
      REQUIRE(series_product_trunc(geometric_pow_series(m, step, order), factor, order) == IntPolynomial{1});
    }
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::uniform_int_distribution<int> len(0, 8);
  auto random_poly = [&] {
    std::vector<Int> c(len(rng));
    for (auto& v : c) v = coeff(rng);
    return IntPolynomial(c);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(), q = random_poly(), r = random_poly();
    REQUIRE(poly_mul(p, q) == poly_mul(q, p));
    REQUIRE(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
    REQUIRE(poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r));
    REQUIRE((p + q) - q == p);
  }
}

TEST_CASE("nonnegativity guard") {
  CHECK(require_nonnegative(Int(3), "x") == 3);
  CHECK_THROWS_AS(require_nonnegative(Int(-1), "x"), std::logic_error);
  CHECK(to_decimal(Int("-123456789012345678901234567890")) == "-123456789012345678901234567890");
}
