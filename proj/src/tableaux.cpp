#include "invdesc/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace invdesc {

namespace {

void check_row_lengths(const Rows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
  }
}

std::string rows_to_string(const Rows& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " / ";
    out += '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows[r][c]);
    }
    out += ']';
  }
  return out;
}

Shape shape_of(const Rows& rows) {
  std::vector<std::size_t> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(row.size());
  return Shape(std::move(parts));
}

std::size_t cell_count(const Rows& rows) {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shape

Shape::Shape(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("shape parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("shape parts must weakly decrease");
    }
  }
}

Shape::Shape(std::initializer_list<std::size_t> parts) : Shape(std::vector<std::size_t>(parts)) {}

std::size_t Shape::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Shape Shape::conjugate() const {
  std::vector<std::size_t> out;
  if (!parts_.empty()) {
    for (std::size_t c = 0; c < parts_.front(); ++c) {
      std::size_t len = 0;
      while (len < parts_.size() && parts_[len] > c) ++len;
      out.push_back(len);
    }
  }
  return Shape(std::move(out));
}

std::string Shape::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void partitions_into(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& prefix,
                     std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Shape> partitions(std::size_t n) {
  std::vector<Shape> out;
  std::vector<std::size_t> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(Rows rows) : rows_(std::move(rows)) {
  check_row_lengths(rows_);
  const std::size_t n = cell_count(rows_);
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      Letter v = rows_[r][c];
      if (v < 1 || v > n || seen[v]) {
        throw std::invalid_argument("standard tableau must hold 1..n once each: " + to_string());
      }
      seen[v] = true;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw std::invalid_argument("standard tableau rows must increase: " + to_string());
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw std::invalid_argument("standard tableau columns must increase: " + to_string());
      }
    }
  }
}

StandardTableau::StandardTableau(std::initializer_list<std::vector<Letter>> rows)
    : StandardTableau(Rows(rows)) {}

std::size_t StandardTableau::size() const noexcept { return cell_count(rows_); }
Shape StandardTableau::shape() const { return shape_of(rows_); }
std::string StandardTableau::to_string() const { return rows_to_string(rows_); }

// ---------------------------------------------------------------------------
// SemistandardTableau

SemistandardTableau::SemistandardTableau(Rows rows, std::size_t symbol_bound)
    : rows_(std::move(rows)), symbol_bound_(symbol_bound) {
  check_row_lengths(rows_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      Letter v = rows_[r][c];
      if (v < 1 || v > symbol_bound_) {
        throw std::invalid_argument("entry outside [1, s]: " + to_string());
      }
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw std::invalid_argument("semistandard rows must strictly increase: " + to_string());
      }
      if (r > 0 && rows_[r - 1][c] > v) {
        throw std::invalid_argument("semistandard columns must weakly increase: " + to_string());
      }
    }
  }
}

std::size_t SemistandardTableau::size() const noexcept { return cell_count(rows_); }
Shape SemistandardTableau::shape() const { return shape_of(rows_); }
std::string SemistandardTableau::to_string() const { return rows_to_string(rows_); }

// ---------------------------------------------------------------------------
// Biword / Composition

Biword::Biword(Word w, YamanouchiWord y, std::size_t symbol_bound)
    : w_(std::move(w)), y_(std::move(y)), symbol_bound_(symbol_bound) {
  if (w_.size() != y_.size()) throw std::invalid_argument("biword rows differ in length");
  const auto& wl = w_.letters();
  for (std::size_t i = 0; i < wl.size(); ++i) {
    if (wl[i] > symbol_bound_) throw std::invalid_argument("biword content exceeds symbol bound");
    if (i > 0 && wl[i - 1] > wl[i]) throw std::invalid_argument("biword content must be nondecreasing");
  }
  for (std::size_t pos : weak_descent_set(y_)) {
    if (wl[pos - 1] >= wl[pos]) {
      throw std::invalid_argument("biword content must strictly increase at descent " +
                                  std::to_string(pos) + " of the row word");
    }
  }
}

std::uint64_t Composition::sum() const noexcept {
  return std::accumulate(components_.begin(), components_.end(), std::uint64_t{0});
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(components_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bijections

YamanouchiWord chi(const StandardTableau& t) {
  std::vector<Letter> word(t.size());
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (Letter v : t.rows()[r]) word[v - 1] = static_cast<Letter>(r + 1);
  }
  return YamanouchiWord(Word(std::move(word)));
}

StandardTableau chi_inverse(const YamanouchiWord& y) {
  Rows rows;
  for (std::size_t i = 1; i <= y.size(); ++i) {
    Letter r = y.at(i);
    if (rows.size() < r) rows.resize(r);
    rows[r - 1].push_back(static_cast<Letter>(i));
  }
  return StandardTableau(std::move(rows));
}

StandardTableau conjugate_tableau(const StandardTableau& t) {
  Rows out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const auto& row = t.rows()[r];
    if (out.size() < row.size()) out.resize(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  }
  return StandardTableau(std::move(out));
}

StandardTableau rs_tableau(const Involution& sigma) {
  Rows p;
  for (Letter x : sigma.word().letters()) {
    for (std::size_t r = 0;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return StandardTableau(std::move(p));
}

YamanouchiWord phi(const Involution& sigma) { return chi(rs_tableau(sigma)); }

Biword ssyt_to_biword(const SemistandardTableau& t) {
  std::vector<std::pair<Letter, Letter>> cells;  // (entry, row)
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (Letter v : t.rows()[r]) cells.emplace_back(v, static_cast<Letter>(r + 1));
  }
  std::sort(cells.begin(), cells.end());
  std::vector<Letter> w, y;
  w.reserve(cells.size());
  y.reserve(cells.size());
  for (auto [v, r] : cells) {
    w.push_back(v);
    y.push_back(r);
  }
  return Biword(Word(std::move(w)), YamanouchiWord(Word(std::move(y))), t.symbol_bound());
}

SemistandardTableau biword_to_ssyt(const Biword& b) {
  Rows rows;
  for (std::size_t i = 1; i <= b.size(); ++i) {
    Letter r = b.y().at(i);
    if (rows.size() < r) rows.resize(r);
    rows[r - 1].push_back(b.w().at(i));
  }
  return SemistandardTableau(std::move(rows), b.symbol_bound());
}

Composition delta_encoding(const Biword& b) {
  const std::size_t n = b.size();
  const std::size_t s = b.symbol_bound();
  if (n == 0) {
    if (s == 0) throw std::invalid_argument("empty biword with s = 0 has no gap encoding");
    return Composition({s - 1});
  }
  const auto& w = b.w().letters();
  std::vector<std::uint64_t> delta(n + 1);
  delta[0] = w[0] - 1;
  for (std::size_t i = 1; i < n; ++i) delta[i] = w[i] - w[i - 1];
  delta[n] = s - w[n - 1];
  return Composition(std::move(delta));
}

Composition delta_prime(const Composition& delta, const PositionSet& descents) {
  std::vector<std::uint64_t> out = delta.components();
  for (std::size_t i : descents) {
    if (i >= out.size()) throw std::invalid_argument("descent position outside the composition");
    if (out[i] == 0) {
      throw std::invalid_argument("component " + std::to_string(i) + " is zero at a descent");
    }
    --out[i];
  }
  return Composition(std::move(out));
}

SemistandardTableau ssyt_from_word_and_composition(const YamanouchiWord& y,
                                                   const Composition& delta_prime,
                                                   std::size_t s) {
  const std::size_t n = y.size();
  if (delta_prime.size() != n + 1) {
    throw std::invalid_argument("composition must have |y| + 1 components");
  }
  const PositionSet descents = weak_descent_set(y);
  const auto expected = static_cast<std::int64_t>(s) - static_cast<std::int64_t>(descents.size()) - 1;
  if (static_cast<std::int64_t>(delta_prime.sum()) != expected) {
    throw std::invalid_argument("composition must sum to s - d(y) - 1");
  }
  std::vector<std::uint64_t> delta = delta_prime.components();
  for (std::size_t i : descents) ++delta[i];
  std::vector<Letter> w(n);
  std::uint64_t value = 1 + delta[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) value += delta[i];
    w[i] = static_cast<Letter>(value);
  }
  return biword_to_ssyt(Biword(Word(std::move(w)), y, s));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Row-major fill of a fixed shape under the row-strict / column-weak rules.
struct SsytFill {
  const std::vector<std::size_t>& parts;
  std::size_t s;
  const std::function<void(const SemistandardTableau&)>& visit;
  Rows rows;

  void run(std::size_t r, std::size_t c) {
    if (r == parts.size()) {
      visit(SemistandardTableau(rows, s));
      return;
    }
    if (c == parts[r]) {
      run(r + 1, 0);
      return;
    }
    Letter lo = 1;
    if (c > 0) lo = rows[r][c - 1] + 1;
    if (r > 0) lo = std::max(lo, rows[r - 1][c]);
    // Leave room for the strictly larger entries still to come in this row.
    const std::size_t room = parts[r] - c - 1;
    for (Letter v = lo; v + room <= s; ++v) {
      rows[r].push_back(v);
      run(r, c + 1);
      rows[r].pop_back();
    }
  }
};

void fill_shape(const Shape& lambda, std::size_t s,
                const std::function<void(const SemistandardTableau&)>& visit) {
  if (!lambda.parts().empty() && lambda.parts().front() > s) return;
  SsytFill fill{lambda.parts(), s, visit, Rows(lambda.rows())};
  fill.run(0, 0);
}

}  // namespace

void for_each_ssyt(std::size_t n, std::size_t s,
                   const std::function<void(const SemistandardTableau&)>& visit,
                   const OracleBounds& bounds) {
  check_bound(n, bounds.ssyt_n, "tableau size");
  check_bound(s, bounds.ssyt_s, "symbol bound");
  for (const Shape& lambda : partitions(n)) fill_shape(lambda, s, visit);
}

std::vector<SemistandardTableau> enumerate_ssyt(std::size_t n, std::size_t s,
                                                const OracleBounds& bounds) {
  std::vector<SemistandardTableau> out;
  for_each_ssyt(n, s, [&](const SemistandardTableau& t) { out.push_back(t); }, bounds);
  return out;
}

std::vector<StandardTableau> enumerate_standard(const Shape& lambda, const OracleBounds& bounds) {
  const std::size_t n = lambda.size();
  check_bound(n, bounds.standard_n, "shape size");
  std::vector<StandardTableau> out;
  const auto& parts = lambda.parts();
  Rows rows(parts.size());
  std::function<void(Letter)> place = [&](Letter next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (rows[r].size() == parts[r]) continue;
      if (r > 0 && rows[r - 1].size() <= rows[r].size()) continue;
      rows[r].push_back(next);
      place(next + 1);
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

std::vector<SemistandardTableau> enumerate_ssyt_of_shape(const Shape& lambda, std::size_t m,
                                                         const OracleBounds& bounds) {
  check_bound(lambda.size(), bounds.shape_n, "shape size");
  check_bound(m, bounds.shape_m, "alphabet size");
  std::vector<SemistandardTableau> out;
  fill_shape(lambda, m, [&](const SemistandardTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace invdesc
