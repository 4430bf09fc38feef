#pragma once

// Closed formulas for the three count tables and the transforms linking them:
//
//   a(n, k)  semistandard tableaux (row-strict, column-weak) with n cells and
//            entries in [1, k]
//   y(n, k)  reverse Yamanouchi words of length n with k weak descents
//   i(n, h)  involutions of [n] with h descents; i(n, h) = y(n, n - 1 - h)
//
// Every routine has a brute-force counterpart built on the enumerators in
// words.hpp and tableaux.hpp.
//
// Boundary conventions: a(0, k) = 1 for every k (the empty tableau),
// a(n, 0) = 0 for n >= 1, y(0, 0) = 1 and I_0(x) = 1. Rows of y and i have
// max(n, 1) entries.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invdesc/arith.hpp"
#include "invdesc/bounds.hpp"

namespace invdesc {

enum class TableLabel { Involutions, Yamanouchi, Ssyt };

/// How a table row was produced. Serialized as formula-eq1, formula-eq3,
/// formula-eq4, transform-eq2, series-Fk and brute-force respectively.
enum class Provenance {
  MultisetSum,        // a(n, k) as a sum of multiset counts
  SignedInverse,      // y(n, k) as the signed binomial inverse of a(n, .)
  ExpandedInverse,    // y(n, k) with the a(n, j) sum inlined
  BinomialTransform,  // a(n, s) as a binomial transform of the y row
  SchurSeries,        // a(n, k) read off 1/((1-x)^k (1-x^2)^C(k,2))
  BruteForce,         // exhaustive enumeration
};

const char* to_string(TableLabel label);
const char* to_string(Provenance provenance);
std::optional<TableLabel> parse_label(const std::string& text);
std::optional<Provenance> parse_provenance(const std::string& text);

/// |I_n| as an exact integer.
Nat involution_count(std::size_t n);

/// a(n, k) = sum_{j=0}^{floor(n/2)} multiset_coeff(C(k,2), j) binom(k+n-2j-1, k-1).
/// Memoized; safe to call concurrently.
Nat ssyt_count(std::size_t n, std::size_t k);

/// Coefficients of x^0 .. x^n_max in 1/((1-x)^k (1-x^2)^C(k,2)); entry n is
/// a(n, k).
std::vector<Nat> ssyt_count_series(std::size_t n_max, std::size_t k);

/// a(n, s) = sum_{k=0}^{s-1} binom(n+k, k) y(n, s-k-1), where y_row holds
/// y(n, 0), y(n, 1), ... and missing entries count as zero. At n = 0 the
/// empty tableau is counted for every s, s = 0 included.
Nat ssyt_count_from_words(std::size_t n, std::size_t s, std::span<const Nat> y_row);

/// y(n, k) = sum_{j=1}^{k+1} (-1)^{k-j+1} binom(n+1, k-j+1) a(n, j).
/// Defined for every k; beyond the row it evaluates to zero. Throws
/// std::logic_error if the signed sum comes out negative.
Nat yamanouchi_count(std::size_t n, std::size_t k);

/// Same quantity with a(n, j) expanded in place:
/// sum_j (-1)^{k-j+1} binom(n+1, k-j+1)
///       sum_{i=0}^{floor(n/2)} multiset_coeff(C(j,2), i) binom(n+j-2i-1, j-1).
Nat yamanouchi_count_expanded(std::size_t n, std::size_t k);

/// The same double sum with the inner binomial upper index typeset as
/// n+j+2i-1. Kept only to demonstrate that this reading disagrees with the
/// enumerated counts; never used to build a table.
Int yamanouchi_count_misprint(std::size_t n, std::size_t k);

/// Rows y(n, 0 .. max(n,1)-1). The expanded rows share inner sums across k.
std::vector<Nat> yamanouchi_row(std::size_t n);
std::vector<Nat> yamanouchi_row_expanded(std::size_t n);
std::vector<Int> yamanouchi_row_misprint(std::size_t n);

/// i(n, h) = y(n, n-1-h) with y taken from the requested provenance
/// (SignedInverse, ExpandedInverse or BruteForce).
std::vector<Nat> involution_row(std::size_t n, Provenance provenance = Provenance::SignedInverse,
                               const OracleBounds& bounds = {});

/// I_n(x) = sum_h i(n, h) x^h.
IntPolynomial involution_descent_polynomial(std::size_t n);

/// Checks sum_s a(n, s) x^s = x I_n(x) / (1-x)^{n+1} coefficientwise up to
/// x^order. For n = 0 the right-hand side is 1/(1-x). Throws
/// std::invalid_argument when order < n + 1.
bool verify_gf_relation(std::size_t n, std::size_t order);

struct BruteRows {
  std::vector<Nat> i_row;
  std::vector<Nat> y_row;
};

/// Descent histograms over all involutions and all Yamanouchi words of
/// length n.
BruteRows brute_tables(std::size_t n, const OracleBounds& bounds = {});

/// Number of enumerated semistandard tableaux with n cells and s symbols.
Nat brute_ssyt_count(std::size_t n, std::size_t s, const OracleBounds& bounds = {});

struct TableRow {
  std::size_t n = 0;
  std::vector<Nat> values;  // values[k]

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Block of rows of one count table, with the method that produced them.
class CountTable {
public:
  CountTable(TableLabel label, Provenance provenance, std::vector<TableRow> rows);

  TableLabel label() const noexcept { return label_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::vector<TableRow>& rows() const noexcept { return rows_; }

  /// Entry (n, k); throws std::out_of_range if the table does not cover it.
  const Nat& value(std::size_t n, std::size_t k) const;

private:
  TableLabel label_;
  Provenance provenance_;
  std::vector<TableRow> rows_;
};

/// Whether `provenance` can produce rows of `label`.
bool provenance_supported(TableLabel label, Provenance provenance);

/// Rows n_from..n_to of a table. Involution and Yamanouchi rows run over
/// k = 0..max(n,1)-1, cut at k_max if given; ssyt rows run over k = 0..k_max,
/// where k_max defaults to n. Rows are computed in parallel. Full involution
/// and Yamanouchi rows are checked to sum to |I_n|.
/// Throws std::invalid_argument for an unsupported provenance or an empty
/// range, and BoundsError for brute force beyond the oracle bounds.
CountTable compute_table(TableLabel label, Provenance provenance, std::size_t n_from,
                         std::size_t n_to, std::optional<std::size_t> k_max = std::nullopt,
                         const OracleBounds& bounds = {});

}  // namespace invdesc
