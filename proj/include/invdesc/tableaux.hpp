#pragma once

// Young tableaux and the bijections between them, involutions and reverse
// Yamanouchi words.
//
// Semistandard tableaux follow the row-strict / column-weak convention:
// entries strictly increase along each row and weakly increase down each
// column. This is the transpose of the usual textbook convention, and every
// count in counting.hpp is taken with respect to it.
//
// Rows and columns are 1-based and the top row is row 1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "invdesc/bounds.hpp"
#include "invdesc/words.hpp"

namespace invdesc {

using Rows = std::vector<std::vector<Letter>>;

/// Partition stored as weakly decreasing positive parts. The empty shape is
/// allowed.
class Shape {
public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> parts);
  Shape(std::initializer_list<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept;  // |lambda|
  std::size_t rows() const noexcept { return parts_.size(); }
  Shape conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

private:
  std::vector<std::size_t> parts_;
};

/// All partitions of n, largest first part first: (n), (n-1,1), ...
std::vector<Shape> partitions(std::size_t n);

class StandardTableau {
public:
  StandardTableau() = default;
  /// Throws std::invalid_argument unless the rows form a standard tableau.
  explicit StandardTableau(Rows rows);
  StandardTableau(std::initializer_list<std::vector<Letter>> rows);

  const Rows& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept;
  Shape shape() const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
  Rows rows_;
};

class SemistandardTableau {
public:
  SemistandardTableau() = default;
  /// Throws std::invalid_argument unless rows are strictly increasing, columns
  /// weakly increasing, row lengths weakly decreasing and entries in [1, s].
  SemistandardTableau(Rows rows, std::size_t symbol_bound);

  const Rows& rows() const noexcept { return rows_; }
  std::size_t symbol_bound() const noexcept { return symbol_bound_; }
  std::size_t size() const noexcept;
  Shape shape() const;
  std::string to_string() const;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
  friend auto operator<=>(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
  Rows rows_;
  std::size_t symbol_bound_ = 0;
};

/// Content word w paired with a row-index word y. Invariants: |w| = |y|, w is
/// weakly increasing within [1, s], and w_i < w_{i+1} at every weak descent i
/// of y.
class Biword {
public:
  Biword() = default;
  /// Throws std::invalid_argument on any invariant violation.
  Biword(Word w, YamanouchiWord y, std::size_t symbol_bound);

  const Word& w() const noexcept { return w_; }
  const YamanouchiWord& y() const noexcept { return y_; }
  std::size_t symbol_bound() const noexcept { return symbol_bound_; }
  std::size_t size() const noexcept { return w_.size(); }

  friend bool operator==(const Biword&, const Biword&) = default;

private:
  Word w_;
  YamanouchiWord y_;
  std::size_t symbol_bound_ = 0;
};

/// Sequence of nonnegative integers, indexed from 0.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<std::uint64_t> components) : components_(std::move(components)) {}
  Composition(std::initializer_list<std::uint64_t> components) : components_(components) {}

  const std::vector<std::uint64_t>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  std::uint64_t operator[](std::size_t i) const { return components_.at(i); }
  std::uint64_t sum() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<std::uint64_t> components_;
};

/// Position i holds the row of the cell containing i.
YamanouchiWord chi(const StandardTableau& t);

/// Appends i to row y_i for i = 1..n.
StandardTableau chi_inverse(const YamanouchiWord& y);

/// Transpose.
StandardTableau conjugate_tableau(const StandardTableau& t);

/// Insertion tableau of sigma under Schensted row insertion. For an
/// involution it coincides with the recording tableau, so it determines sigma.
StandardTableau rs_tableau(const Involution& sigma);

/// chi(rs_tableau(sigma)). Turns each ascent of sigma into a weak descent.
YamanouchiWord phi(const Involution& sigma);

/// w lists the entries in nondecreasing order; y lists, symbol by symbol,
/// the rows holding that symbol in increasing order.
Biword ssyt_to_biword(const SemistandardTableau& t);

/// Places w_i at the end of row y_i for i = 1..n.
SemistandardTableau biword_to_ssyt(const Biword& b);

/// Gap sequence w_1 - 1, w_2 - w_1, ..., w_n - w_{n-1}, s - w_n. Its n + 1
/// components sum to s - 1, and component i is positive at every weak
/// descent i of y. Throws std::invalid_argument for the empty biword with
/// s = 0, which has no such encoding.
Composition delta_encoding(const Biword& b);

/// Subtracts one from component i for each i in `descents`. Throws
/// std::invalid_argument if a listed position is out of range or its
/// component is already zero.
Composition delta_prime(const Composition& delta, const PositionSet& descents);

/// Rebuilds the tableau with row word y and reduced gap sequence delta_prime.
/// Requires |delta_prime| = |y| + 1 and a component sum of s - d(y) - 1.
SemistandardTableau ssyt_from_word_and_composition(const YamanouchiWord& y,
                                                   const Composition& delta_prime,
                                                   std::size_t s);

/// Every semistandard tableau with n cells and entries in [1, s].
/// Bounded by bounds.ssyt_n / bounds.ssyt_s.
void for_each_ssyt(std::size_t n, std::size_t s,
                   const std::function<void(const SemistandardTableau&)>& visit,
                   const OracleBounds& bounds = {});
std::vector<SemistandardTableau> enumerate_ssyt(std::size_t n, std::size_t s,
                                                const OracleBounds& bounds = {});

/// Standard tableaux of shape lambda, in lexicographic order of chi(T).
/// Bounded by bounds.standard_n.
std::vector<StandardTableau> enumerate_standard(const Shape& lambda, const OracleBounds& bounds = {});

/// Semistandard fillings of lambda with entries in [1, m]. Bounded by
/// bounds.shape_n and bounds.shape_m.
std::vector<SemistandardTableau> enumerate_ssyt_of_shape(const Shape& lambda, std::size_t m,
                                                         const OracleBounds& bounds = {});

}  // namespace invdesc
