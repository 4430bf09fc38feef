#pragma once

// Words over the positive integers, weak descents, reverse Yamanouchi words
// and involutions, plus exhaustive enumeration of the latter two.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "invdesc/bounds.hpp"

namespace invdesc {

using Letter = std::uint32_t;

/// Sorted 1-based positions.
using PositionSet = std::vector<std::size_t>;

/// Finite sequence of letters, each >= 1.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  /// 1-based access, matching the positions reported by descent sets.
  Letter at(std::size_t position) const { return letters_.at(position - 1); }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// { i : 1 <= i < n, w_i >= w_{i+1} }. Equal neighbours count as a descent.
PositionSet weak_descent_set(const Word& w);

/// Cardinality of weak_descent_set(w).
std::size_t descent_count(const Word& w);

/// True iff every prefix holds at least as many i's as (i+1)'s, for all i.
bool is_reverse_yamanouchi(const Word& w);

/// A word with the lattice-prefix property.
class YamanouchiWord {
public:
  YamanouchiWord() = default;
  /// Throws std::invalid_argument unless is_reverse_yamanouchi(w).
  explicit YamanouchiWord(Word w);
  YamanouchiWord(std::initializer_list<Letter> letters);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  Letter at(std::size_t position) const { return word_.at(position); }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const YamanouchiWord&, const YamanouchiWord&) = default;
  friend auto operator<=>(const YamanouchiWord&, const YamanouchiWord&) = default;

private:
  Word word_;
};

inline PositionSet weak_descent_set(const YamanouchiWord& y) { return weak_descent_set(y.word()); }
inline std::size_t descent_count(const YamanouchiWord& y) { return descent_count(y.word()); }

/// Replaces each letter by the number of times it has occurred so far.
/// Self-inverse, and complements the descent count to n - 1.
YamanouchiWord conjugate_word(const YamanouchiWord& y);

/// Self-inverse permutation of [n] in one-line notation.
class Involution {
public:
  Involution() = default;
  /// Throws std::invalid_argument unless `one_line` is a permutation of
  /// 1..n with sigma(sigma(i)) = i.
  explicit Involution(std::vector<Letter> one_line);
  Involution(std::initializer_list<Letter> one_line);

  static Involution identity(std::size_t n);
  static Involution reversal(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  /// sigma(i), 1-based.
  Letter operator()(std::size_t i) const { return word_.at(i); }
  const Word& word() const noexcept { return word_; }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const Involution&, const Involution&) = default;

private:
  Word word_;
};

/// Descent set of sigma(1) ... sigma(n).
PositionSet descent_set_involution(const Involution& sigma);

/// Involution numbers t(0..n): t(0) = t(1) = 1, t(n) = t(n-1) + (n-1) t(n-2).
std::vector<std::uint64_t> involution_numbers(std::size_t n);

/// Visits every reverse Yamanouchi word of length n once, in lexicographic
/// order. Throws BoundsError when n > bounds.yamanouchi_n.
void for_each_yamanouchi(std::size_t n, const std::function<void(const YamanouchiWord&)>& visit,
                         const OracleBounds& bounds = {});
std::vector<YamanouchiWord> enumerate_yamanouchi(std::size_t n, const OracleBounds& bounds = {});

/// Visits every involution of [n] once, in lexicographic order of the
/// one-line form. Throws BoundsError when n > bounds.involution_n.
void for_each_involution(std::size_t n, const std::function<void(const Involution&)>& visit,
                         const OracleBounds& bounds = {});
std::vector<Involution> enumerate_involutions(std::size_t n, const OracleBounds& bounds = {});

}  // namespace invdesc
