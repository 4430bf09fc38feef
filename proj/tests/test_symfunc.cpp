#include "doctest.h"
#include "invdesc/counting.hpp"
#include "invdesc/symfunc.hpp"

using namespace invdesc;

TEST_CASE("Schur polynomials under the row-strict convention") {
  CHECK(schur_via_ssyt(Shape{1, 1}, 2).to_string() == "1*x1^2 + 1*x1*x2 + 1*x2^2");
  CHECK(schur_via_ssyt(Shape{2}, 2).to_string() == "1*x1*x2");
  CHECK(schur_via_ssyt(Shape{1}, 3).to_string() == "1*x1 + 1*x2 + 1*x3");
  CHECK(schur_via_ssyt(Shape{2, 1}, 2).to_string() == "1*x1^2*x2 + 1*x1*x2^2");
  CHECK(schur_via_ssyt(Shape{3}, 2).to_string() == "0");
}

TEST_CASE("fundamental quasisymmetric polynomials") {
  CHECK(fundamental_quasisym({1, 1}, 3).to_string() == "1*x1*x2 + 1*x1*x3 + 1*x2*x3");
  CHECK(fundamental_quasisym({1, 2}, 2).to_string() == "1*x1^2 + 1*x1*x2 + 1*x2^2");
  CHECK(fundamental_quasisym(YamanouchiWord{}, 2).to_string() == "1");
}

TEST_CASE("sparse polynomial arithmetic") {
  SparsePolynomial p(2);
  p.add_term({1, 0}, 2);
  p.add_term({0, 1});
  SparsePolynomial q(2);
  q.add_term({1, 0}, 3);
  p += q;
  CHECK(p.to_string() == "5*x1 + 1*x2");
  CHECK(p.evaluate_at_ones() == 6);
  CHECK_THROWS_AS(p.add_term({1}), std::invalid_argument);
}

TEST_CASE("Schur expansion into fundamentals") {
  CHECK(yamanouchi_words_of_shape(Shape{2, 1}).size() == 2);
  CHECK(verify_schur_identity(Shape{2}, 3));
  CHECK(verify_schur_identity(Shape{1, 1}, 2));
  CHECK(verify_schur_identity(Shape{2, 1}, 2));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions(n)) {
      for (std::size_t m = 1; m <= 4; ++m) REQUIRE(verify_schur_identity(lambda, m));
    }
  }
}

TEST_CASE("specializations") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      Nat total = 0;
      for (const auto& lambda : partitions(n)) total += schur_via_ssyt(lambda, m).evaluate_at_ones();
      REQUIRE(total == brute_ssyt_count(n, m));
      REQUIRE(total == ssyt_count(n, m));
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
      for (std::size_t m = 1; m <= 4; ++m) {
        const auto d = static_cast<std::int64_t>(descent_count(y));
        REQUIRE(fundamental_quasisym(y, m).evaluate_at_ones() ==
                binom(static_cast<std::int64_t>(n + m) - d - 1, static_cast<std::int64_t>(n)));
      }
    });
  }
  CHECK_THROWS_AS(schur_via_ssyt(Shape{7}, 2), BoundsError);
}
