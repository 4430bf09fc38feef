#include "invdesc/analysis.hpp"

#include <stdexcept>

#include "invdesc/counting.hpp"
#include "parallel.hpp"

namespace invdesc {

std::vector<Violation> log_concavity_violations(std::span<const Nat> s) {
  std::vector<Violation> out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    Nat outer = s[i - 1] * s[i + 1];
    Nat square = s[i] * s[i];
    if (outer > square) out.push_back({i, std::move(outer), std::move(square)});
  }
  return out;
}

bool is_unimodal(std::span<const Nat> s) {
  std::size_t i = 1;
  while (i < s.size() && s[i - 1] <= s[i]) ++i;
  while (i < s.size() && s[i - 1] >= s[i]) ++i;
  return i >= s.size();
}

bool is_symmetric(std::span<const Nat> s) {
  for (std::size_t i = 0, j = s.size(); i < j; ++i) {
    --j;
    if (s[i] != s[j]) return false;
  }
  return true;
}

ShapeReport shape_report(std::string label, std::string indexing, std::size_t n,
                         std::vector<Nat> sequence) {
  ShapeReport r;
  r.sequence_label = std::move(label);
  r.indexing = std::move(indexing);
  r.n = n;
  r.symmetric = is_symmetric(sequence);
  r.unimodal = is_unimodal(sequence);
  r.violations = log_concavity_violations(sequence);
  r.log_concave = r.violations.empty();
  r.sequence = std::move(sequence);
  return r;
}

namespace {

template <class RowFn>
std::vector<ShapeReport> scan(std::size_t n_from, std::size_t n_to, const char* label,
                              const char* indexing, RowFn&& row) {
  if (n_from > n_to) throw std::invalid_argument("scan: n_from must not exceed n_to");
  std::vector<ShapeReport> out(n_to - n_from + 1);
  detail::parallel_for(out.size(), [&](std::size_t idx) {
    const std::size_t n = n_from + idx;
    out[idx] = shape_report(label, indexing, n, row(n));
  });
  return out;
}

}  // namespace

std::vector<ShapeReport> scan_involution_rows(std::size_t n_from, std::size_t n_to) {
  return scan(n_from, n_to, to_string(TableLabel::Involutions), "h = number of descents of the involution",
              [](std::size_t n) { return involution_row(n); });
}

std::vector<ShapeReport> scan_yamanouchi_rows(std::size_t n_from, std::size_t n_to) {
  return scan(n_from, n_to, to_string(TableLabel::Yamanouchi), "k = number of weak descents of the word",
              [](std::size_t n) { return yamanouchi_row(n); });
}

std::vector<ShapeReport> scan_ssyt_rows(std::size_t n_from, std::size_t n_to,
                                        std::optional<std::size_t> k_max) {
  return scan(n_from, n_to, to_string(TableLabel::Ssyt), "k = number of symbols", [&](std::size_t n) {
    std::vector<Nat> row(k_max.value_or(n) + 1);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = ssyt_count(n, k);
    return row;
  });
}

const ShapeReport* first_non_log_concave(const std::vector<ShapeReport>& reports) {
  const ShapeReport* best = nullptr;
  for (const auto& r : reports) {
    if (!r.log_concave && (!best || r.n < best->n)) best = &r;
  }
  return best;
}

}  // namespace invdesc
