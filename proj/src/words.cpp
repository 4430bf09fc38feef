#include "invdesc/words.hpp"

#include <stdexcept>

namespace invdesc {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l == 0) throw std::invalid_argument("word letters must be positive");
  }
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

PositionSet weak_descent_set(const Word& w) {
  PositionSet out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i] >= l[i + 1]) out.push_back(i + 1);
  }
  return out;
}

std::size_t descent_count(const Word& w) {
  std::size_t d = 0;
  const auto& l = w.letters();
  for (std::size_t i = 0; i + 1 < l.size(); ++i) d += l[i] >= l[i + 1];
  return d;
}

bool is_reverse_yamanouchi(const Word& w) {
  // counts[v] = occurrences of v so far; index 0 unused.
  std::vector<std::size_t> counts(w.size() + 2, 0);
  for (Letter l : w.letters()) {
    if (l > w.size()) return false;
    ++counts[l];
    if (l > 1 && counts[l] > counts[l - 1]) return false;
  }
  return true;
}

YamanouchiWord::YamanouchiWord(Word w) : word_(std::move(w)) {
  if (!is_reverse_yamanouchi(word_)) {
    throw std::invalid_argument("not a reverse Yamanouchi word: " + word_.to_string());
  }
}

YamanouchiWord::YamanouchiWord(std::initializer_list<Letter> letters) : YamanouchiWord(Word(letters)) {}

YamanouchiWord conjugate_word(const YamanouchiWord& y) {
  std::vector<std::size_t> counts(y.size() + 2, 0);
  std::vector<Letter> out;
  out.reserve(y.size());
  for (Letter l : y.word().letters()) out.push_back(static_cast<Letter>(++counts[l]));
  return YamanouchiWord(Word(std::move(out)));
}

Involution::Involution(std::vector<Letter> one_line) : word_(one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> seen(n + 1, false);
  for (Letter v : one_line) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation: " + word_.to_string());
    }
    seen[v] = true;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (one_line[one_line[i - 1] - 1] != i) {
      throw std::invalid_argument("permutation is not an involution: " + word_.to_string());
    }
  }
}

Involution::Involution(std::initializer_list<Letter> one_line)
    : Involution(std::vector<Letter>(one_line)) {}

Involution Involution::identity(std::size_t n) {
  std::vector<Letter> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Letter>(i + 1);
  return Involution(std::move(v));
}

Involution Involution::reversal(std::size_t n) {
  std::vector<Letter> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Letter>(n - i);
  return Involution(std::move(v));
}

PositionSet descent_set_involution(const Involution& sigma) {
  return weak_descent_set(sigma.word());
}

std::vector<std::uint64_t> involution_numbers(std::size_t n) {
  std::vector<std::uint64_t> t(n + 1, 1);
  for (std::size_t i = 2; i <= n; ++i) t[i] = t[i - 1] + (i - 1) * t[i - 2];
  return t;
}

namespace {

struct YamanouchiSearch {
  std::size_t n;
  const std::function<void(const YamanouchiWord&)>& visit;
  std::vector<Letter> prefix;
  std::vector<std::size_t> counts;  // counts[v], v in 1..n

  void run() {
    if (prefix.size() == n) {
      visit(YamanouchiWord(Word(prefix)));
      return;
    }
    for (Letter l = 1; l <= n; ++l) {
      if (l > 1 && counts[l] >= counts[l - 1]) {
        // Appending l would break the lattice condition; so would anything
        // larger once counts[l - 1] is zero.
        if (counts[l - 1] == 0) break;
        continue;
      }
      prefix.push_back(l);
      ++counts[l];
      run();
      --counts[l];
      prefix.pop_back();
    }
  }
};

struct InvolutionSearch {
  std::size_t n;
  const std::function<void(const Involution&)>& visit;
  std::vector<Letter> image;  // 0 = unassigned

  void run(std::size_t from) {
    std::size_t i = from;
    while (i < n && image[i] != 0) ++i;
    if (i == n) {
      visit(Involution(image));
      return;
    }
    image[i] = static_cast<Letter>(i + 1);
    run(i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (image[j] != 0) continue;
      image[i] = static_cast<Letter>(j + 1);
      image[j] = static_cast<Letter>(i + 1);
      run(i + 1);
      image[j] = 0;
    }
    image[i] = 0;
  }
};

}  // namespace

void for_each_yamanouchi(std::size_t n, const std::function<void(const YamanouchiWord&)>& visit,
                         const OracleBounds& bounds) {
  check_bound(n, bounds.yamanouchi_n, "Yamanouchi word length");
  YamanouchiSearch search{n, visit, {}, std::vector<std::size_t>(n + 2, 0)};
  search.prefix.reserve(n);
  search.run();
}

std::vector<YamanouchiWord> enumerate_yamanouchi(std::size_t n, const OracleBounds& bounds) {
  std::vector<YamanouchiWord> out;
  for_each_yamanouchi(n, [&](const YamanouchiWord& y) { out.push_back(y); }, bounds);
  return out;
}

void for_each_involution(std::size_t n, const std::function<void(const Involution&)>& visit,
                         const OracleBounds& bounds) {
  check_bound(n, bounds.involution_n, "involution size");
  InvolutionSearch search{n, visit, std::vector<Letter>(n, 0)};
  search.run(0);
}

std::vector<Involution> enumerate_involutions(std::size_t n, const OracleBounds& bounds) {
  std::vector<Involution> out;
  for_each_involution(n, [&](const Involution& s) { out.push_back(s); }, bounds);
  return out;
}

}  // namespace invdesc
