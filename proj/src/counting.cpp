#include "invdesc/counting.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "invdesc/tableaux.hpp"
#include "invdesc/words.hpp"
#include "parallel.hpp"

namespace invdesc {

namespace {

struct NameEntry {
  Provenance provenance;
  const char* name;
};

constexpr NameEntry kProvenanceNames[] = {
    {Provenance::MultisetSum, "formula-eq1"},
    {Provenance::SignedInverse, "formula-eq3"},
    {Provenance::ExpandedInverse, "formula-eq4"},
    {Provenance::BinomialTransform, "transform-eq2"},
    {Provenance::SchurSeries, "series-Fk"},
    {Provenance::BruteForce, "brute-force"},
};

// Concurrent memo for ssyt_count. Distinct keys may be inserted from
// several threads at once.
class CountMemo {
public:
  std::optional<Nat> find(std::size_t n, std::size_t k) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find({n, k});
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  void store(std::size_t n, std::size_t k, const Nat& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(std::make_pair(n, k), value);
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, Nat> values_;
};

CountMemo& ssyt_memo() {
  static CountMemo memo;
  return memo;
}

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t pairs(std::size_t j) { return j == 0 ? 0 : static_cast<std::uint64_t>(j) * (j - 1) / 2; }

std::size_t row_length(std::size_t n) { return std::max<std::size_t>(n, 1); }

// sum_{i=0}^{floor(n/2)} multiset_coeff(C(j,2), i) binom(n + j + sign*2i - 1, j - 1)
Nat expanded_inner(std::size_t n, std::size_t j, int sign) {
  Nat sum = 0;
  for (std::size_t i = 0; i <= n / 2; ++i) {
    std::int64_t top = as_signed(n + j) + sign * 2 * as_signed(i) - 1;
    sum += multiset_coeff(pairs(j), i) * binom(top, as_signed(j) - 1);
  }
  return sum;
}

// sum_{j=1}^{k+1} (-1)^{k-j+1} binom(n+1, k-j+1) inner(j)
template <class Inner>
Int signed_inverse(std::size_t n, std::size_t k, Inner&& inner) {
  Int total = 0;
  for (std::size_t j = 1; j <= k + 1; ++j) {
    const std::size_t gap = k + 1 - j;
    Int term = binom(as_signed(n) + 1, as_signed(gap)) * inner(j);
    if (gap % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

const char* to_string(TableLabel label) {
  switch (label) {
    case TableLabel::Involutions: return "involutions-i";
    case TableLabel::Yamanouchi: return "yamanouchi-y";
    case TableLabel::Ssyt: return "ssyt-a";
  }
  return "?";
}

const char* to_string(Provenance provenance) {
  for (const auto& e : kProvenanceNames) {
    if (e.provenance == provenance) return e.name;
  }
  return "?";
}

std::optional<TableLabel> parse_label(const std::string& text) {
  for (auto label : {TableLabel::Involutions, TableLabel::Yamanouchi, TableLabel::Ssyt}) {
    if (text == to_string(label)) return label;
  }
  return std::nullopt;
}

std::optional<Provenance> parse_provenance(const std::string& text) {
  for (const auto& e : kProvenanceNames) {
    if (text == e.name) return e.provenance;
  }
  return std::nullopt;
}

Nat involution_count(std::size_t n) {
  Nat prev = 1, cur = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    Nat next = cur + (i - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Nat ssyt_count(std::size_t n, std::size_t k) {
  if (n == 0) return 1;
  if (auto hit = ssyt_memo().find(n, k)) return *hit;
  Nat sum = 0;
  for (std::size_t j = 0; j <= n / 2; ++j) {
    sum += multiset_coeff(pairs(k), j) * binom(as_signed(k + n - 2 * j) - 1, as_signed(k) - 1);
  }
  ssyt_memo().store(n, k, sum);
  return sum;
}

std::vector<Nat> ssyt_count_series(std::size_t n_max, std::size_t k) {
  IntPolynomial product = series_product_trunc(geometric_pow_series(k, 1, n_max),
                                               geometric_pow_series(pairs(k), 2, n_max), n_max);
  std::vector<Nat> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = product.coeff(n);
  return out;
}

Nat ssyt_count_from_words(std::size_t n, std::size_t s, std::span<const Nat> y_row) {
  auto y = [&](std::size_t j) -> Nat { return j < y_row.size() ? y_row[j] : Nat(0); };
  if (n == 0) return y(0);
  Nat sum = 0;
  for (std::size_t k = 0; k < s; ++k) {
    sum += binom(as_signed(n + k), as_signed(k)) * y(s - k - 1);
  }
  return sum;
}

Nat yamanouchi_count(std::size_t n, std::size_t k) {
  Int v = signed_inverse(n, k, [&](std::size_t j) { return ssyt_count(n, j); });
  return require_nonnegative(v, "Yamanouchi descent count");
}

Nat yamanouchi_count_expanded(std::size_t n, std::size_t k) {
  Int v = signed_inverse(n, k, [&](std::size_t j) { return expanded_inner(n, j, -1); });
  return require_nonnegative(v, "Yamanouchi descent count");
}

Int yamanouchi_count_misprint(std::size_t n, std::size_t k) {
  return signed_inverse(n, k, [&](std::size_t j) { return expanded_inner(n, j, +1); });
}

std::vector<Nat> yamanouchi_row(std::size_t n) {
  std::vector<Nat> row(row_length(n));
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = yamanouchi_count(n, k);
  return row;
}

namespace {

std::vector<Int> expanded_row(std::size_t n, int sign) {
  const std::size_t len = row_length(n);
  std::vector<Nat> inner(len + 1);
  for (std::size_t j = 1; j <= len; ++j) inner[j] = expanded_inner(n, j, sign);
  std::vector<Int> row(len);
  for (std::size_t k = 0; k < len; ++k) {
    row[k] = signed_inverse(n, k, [&](std::size_t j) { return inner[j]; });
  }
  return row;
}

}  // namespace

std::vector<Nat> yamanouchi_row_expanded(std::size_t n) {
  std::vector<Int> row = expanded_row(n, -1);
  for (const auto& v : row) require_nonnegative(v, "Yamanouchi descent count");
  return row;
}

std::vector<Int> yamanouchi_row_misprint(std::size_t n) { return expanded_row(n, +1); }

std::vector<Nat> involution_row(std::size_t n, Provenance provenance, const OracleBounds& bounds) {
  std::vector<Nat> y;
  switch (provenance) {
    case Provenance::SignedInverse: y = yamanouchi_row(n); break;
    case Provenance::ExpandedInverse: y = yamanouchi_row_expanded(n); break;
    case Provenance::BruteForce: return brute_tables(n, bounds).i_row;
    default:
      throw std::invalid_argument(std::string("cannot build an involution row from ") +
                                  to_string(provenance));
  }
  std::reverse(y.begin(), y.end());
  return y;
}

IntPolynomial involution_descent_polynomial(std::size_t n) {
  return IntPolynomial(involution_row(n));
}

bool verify_gf_relation(std::size_t n, std::size_t order) {
  if (order < n + 1) throw std::invalid_argument("verify_gf_relation: order must be at least n + 1");
  IntPolynomial rhs;
  if (n == 0) {
    rhs = geometric_pow_series(1, 1, order);
  } else {
    IntPolynomial shifted = poly_mul(IntPolynomial::monomial(1), involution_descent_polynomial(n));
    rhs = series_product_trunc(shifted, geometric_pow_series(n + 1, 1, order), order);
  }
  for (std::size_t s = 0; s <= order; ++s) {
    if (ssyt_count(n, s) != rhs.coeff(s)) return false;
  }
  return true;
}

BruteRows brute_tables(std::size_t n, const OracleBounds& bounds) {
  BruteRows rows{std::vector<Nat>(row_length(n), 0), std::vector<Nat>(row_length(n), 0)};
  std::vector<std::uint64_t> i_hist(row_length(n), 0), y_hist(row_length(n), 0);
  for_each_involution(n, [&](const Involution& s) { ++i_hist[descent_count(s.word())]; }, bounds);
  for_each_yamanouchi(n, [&](const YamanouchiWord& y) { ++y_hist[descent_count(y)]; }, bounds);
  for (std::size_t k = 0; k < row_length(n); ++k) {
    rows.i_row[k] = static_cast<unsigned long>(i_hist[k]);
    rows.y_row[k] = static_cast<unsigned long>(y_hist[k]);
  }
  return rows;
}

Nat brute_ssyt_count(std::size_t n, std::size_t s, const OracleBounds& bounds) {
  unsigned long count = 0;
  for_each_ssyt(n, s, [&](const SemistandardTableau&) { ++count; }, bounds);
  return count;
}

// ---------------------------------------------------------------------------
// CountTable

CountTable::CountTable(TableLabel label, Provenance provenance, std::vector<TableRow> rows)
    : label_(label), provenance_(provenance), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    for (const auto& v : row.values) require_nonnegative(v, "table entry");
  }
}

const Nat& CountTable::value(std::size_t n, std::size_t k) const {
  for (const auto& row : rows_) {
    if (row.n == n) return row.values.at(k);
  }
  throw std::out_of_range("table has no row n = " + std::to_string(n));
}

bool provenance_supported(TableLabel label, Provenance provenance) {
  switch (label) {
    case TableLabel::Involutions:
    case TableLabel::Yamanouchi:
      return provenance == Provenance::SignedInverse || provenance == Provenance::ExpandedInverse ||
             provenance == Provenance::BruteForce;
    case TableLabel::Ssyt:
      return provenance == Provenance::MultisetSum || provenance == Provenance::SchurSeries ||
             provenance == Provenance::BinomialTransform || provenance == Provenance::BruteForce;
  }
  return false;
}

namespace {

std::vector<Nat> word_row(TableLabel label, Provenance provenance, std::size_t n,
                          const OracleBounds& bounds) {
  if (provenance == Provenance::BruteForce) {
    BruteRows brute = brute_tables(n, bounds);
    return label == TableLabel::Involutions ? brute.i_row : brute.y_row;
  }
  if (label == TableLabel::Involutions) return involution_row(n, provenance, bounds);
  return provenance == Provenance::SignedInverse ? yamanouchi_row(n) : yamanouchi_row_expanded(n);
}

std::vector<Nat> ssyt_row(Provenance provenance, std::size_t n, std::size_t k_max,
                          const OracleBounds& bounds) {
  std::vector<Nat> row(k_max + 1);
  std::vector<Nat> y;
  if (provenance == Provenance::BinomialTransform) y = yamanouchi_row_expanded(n);
  for (std::size_t k = 0; k <= k_max; ++k) {
    switch (provenance) {
      case Provenance::MultisetSum: row[k] = ssyt_count(n, k); break;
      case Provenance::SchurSeries: row[k] = ssyt_count_series(n, k)[n]; break;
      case Provenance::BinomialTransform: row[k] = ssyt_count_from_words(n, k, y); break;
      case Provenance::BruteForce: row[k] = brute_ssyt_count(n, k, bounds); break;
      default: throw std::invalid_argument("unsupported provenance for ssyt rows");
    }
  }
  return row;
}

}  // namespace

CountTable compute_table(TableLabel label, Provenance provenance, std::size_t n_from,
                         std::size_t n_to, std::optional<std::size_t> k_max,
                         const OracleBounds& bounds) {
  if (!provenance_supported(label, provenance)) {
    throw std::invalid_argument(std::string("method ") + to_string(provenance) +
                                " cannot produce " + to_string(label) + " rows");
  }
  if (n_from > n_to) throw std::invalid_argument("empty n range");
  if (provenance == Provenance::BruteForce) {
    // Fail before spawning work.
    if (label == TableLabel::Ssyt) {
      check_bound(n_to, bounds.ssyt_n, "tableau size");
      check_bound(k_max.value_or(n_to), bounds.ssyt_s, "symbol bound");
    } else {
      check_bound(n_to, bounds.involution_n, "involution size");
      check_bound(n_to, bounds.yamanouchi_n, "Yamanouchi word length");
    }
  }

  std::vector<TableRow> rows(n_to - n_from + 1);
  detail::parallel_for(rows.size(), [&](std::size_t idx) {
    const std::size_t n = n_from + idx;
    TableRow& row = rows[idx];
    row.n = n;
    if (label == TableLabel::Ssyt) {
      row.values = ssyt_row(provenance, n, k_max.value_or(n), bounds);
      return;
    }
    row.values = word_row(label, provenance, n, bounds);
    Nat total = 0;
    for (const auto& v : row.values) total += v;
    if (total != involution_count(n)) {
      throw std::logic_error("row " + std::to_string(n) + " does not sum to the involution count");
    }
    if (k_max && *k_max + 1 < row.values.size()) row.values.resize(*k_max + 1);
  });
  return CountTable(label, provenance, std::move(rows));
}

}  // namespace invdesc
