#pragma once

// Shape diagnostics for integer sequences: symmetry, unimodality and
// log-concavity with exact violation witnesses.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invdesc/arith.hpp"

namespace invdesc {

/// Interior index i where s_{i-1} * s_{i+1} > s_i^2.
struct Violation {
  std::size_t index = 0;
  Nat outer_product;  // s_{i-1} * s_{i+1}
  Nat square;         // s_i^2

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// All violations of s_{i-1} s_{i+1} <= s_i^2, in index order. Zeros are
/// treated literally, so a zero between two positive entries is reported.
std::vector<Violation> log_concavity_violations(std::span<const Nat> s);

inline bool is_log_concave(std::span<const Nat> s) { return log_concavity_violations(s).empty(); }

/// True iff s weakly rises to some index and weakly falls after it.
bool is_unimodal(std::span<const Nat> s);

/// True iff s equals its reversal.
bool is_symmetric(std::span<const Nat> s);

struct ShapeReport {
  std::string sequence_label;  // e.g. "involutions-i"
  std::string indexing;        // "i-index (descents of the involution)", ...
  std::size_t n = 0;
  std::vector<Nat> sequence;
  bool symmetric = false;
  bool unimodal = false;
  bool log_concave = false;
  std::vector<Violation> violations;
};

ShapeReport shape_report(std::string label, std::string indexing, std::size_t n,
                         std::vector<Nat> sequence);

/// Diagnostics of the involution descent rows i(n, .) for n_from..n_to,
/// computed from the closed formulas. Rows are built in parallel and
/// returned in n order.
std::vector<ShapeReport> scan_involution_rows(std::size_t n_from, std::size_t n_to);

/// Diagnostics of the Yamanouchi rows y(n, .); same layout as above.
std::vector<ShapeReport> scan_yamanouchi_rows(std::size_t n_from, std::size_t n_to);

/// Diagnostics of (a(n, k))_{k = 0..k_max} for n_from..n_to. Without k_max
/// each row runs over k = 0..n.
std::vector<ShapeReport> scan_ssyt_rows(std::size_t n_from, std::size_t n_to,
                                        std::optional<std::size_t> k_max = std::nullopt);

/// Smallest n among the reports whose row is not log-concave, if any.
const ShapeReport* first_non_log_concave(const std::vector<ShapeReport>& reports);

}  // namespace invdesc
