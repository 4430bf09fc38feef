#include "invdesc/invdesc.h"

#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invdesc/analysis.hpp"
#include "invdesc/counting.hpp"
#include "invdesc/verify.hpp"

struct invdesc_table {
  std::string label;
  std::string provenance;
  std::vector<std::size_t> ns;
  std::vector<std::vector<std::string>> values;
};

struct invdesc_report {
  invdesc::VerifyReport report;
};

struct ScanViolation {
  std::size_t index;
  std::string outer;
  std::string square;
};

struct ScanRow {
  std::size_t n;
  bool symmetric, unimodal, log_concave;
  std::vector<std::string> values;
  std::vector<ScanViolation> violations;
};

struct invdesc_scan {
  std::string label;
  std::string indexing;
  std::vector<ScanRow> rows;
  long long first_violating_n = -1;
};

namespace {

thread_local std::string g_last_error;

invdesc_status fail(invdesc_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Maps the C++ exception hierarchy onto status codes.
template <class Fn>
invdesc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return INVDESC_OK;
  } catch (const invdesc::BoundsError& e) {
    return fail(INVDESC_ERR_OUT_OF_BOUNDS, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(INVDESC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return fail(INVDESC_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(INVDESC_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(INVDESC_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(INVDESC_ERR_UNKNOWN, "unknown error");
  }
}

invdesc::OracleBounds to_bounds(const invdesc_bounds* b) {
  invdesc::OracleBounds out;
  if (!b) return out;
  out.yamanouchi_n = b->yamanouchi_n;
  out.involution_n = b->involution_n;
  out.ssyt_n = b->ssyt_n;
  out.ssyt_s = b->ssyt_s;
  out.standard_n = b->standard_n;
  out.shape_n = b->shape_n;
  out.shape_m = b->shape_m;
  return out;
}

invdesc::TableLabel to_label(invdesc_kind kind) {
  switch (kind) {
    case INVDESC_KIND_INVOLUTIONS: return invdesc::TableLabel::Involutions;
    case INVDESC_KIND_YAMANOUCHI: return invdesc::TableLabel::Yamanouchi;
    case INVDESC_KIND_SSYT: return invdesc::TableLabel::Ssyt;
  }
  throw std::invalid_argument("unknown table kind");
}

invdesc::Provenance to_provenance(invdesc_kind kind, invdesc_method method) {
  const bool ssyt = kind == INVDESC_KIND_SSYT;
  switch (method) {
    case INVDESC_METHOD_FORMULA:
      return ssyt ? invdesc::Provenance::MultisetSum : invdesc::Provenance::SignedInverse;
    case INVDESC_METHOD_EXPANDED:
      if (ssyt) break;
      return invdesc::Provenance::ExpandedInverse;
    case INVDESC_METHOD_SERIES:
      if (!ssyt) break;
      return invdesc::Provenance::SchurSeries;
    case INVDESC_METHOD_TRANSFORM:
      if (!ssyt) break;
      return invdesc::Provenance::BinomialTransform;
    case INVDESC_METHOD_BRUTE:
      return invdesc::Provenance::BruteForce;
    default:
      throw std::invalid_argument("unknown method");
  }
  throw std::invalid_argument("method not available for this table kind");
}

invdesc::VerifySuite to_suite(invdesc_suite suite) {
  switch (suite) {
    case INVDESC_SUITE_BIJECTIONS: return invdesc::VerifySuite::Bijections;
    case INVDESC_SUITE_SYMMETRY: return invdesc::VerifySuite::Symmetry;
    case INVDESC_SUITE_EQ2: return invdesc::VerifySuite::BinomialTransform;
    case INVDESC_SUITE_EQ3: return invdesc::VerifySuite::SignedInverse;
    case INVDESC_SUITE_EQ4: return invdesc::VerifySuite::ExpandedInverse;
    case INVDESC_SUITE_GF: return invdesc::VerifySuite::GeneratingFunction;
    case INVDESC_SUITE_SCHUR: return invdesc::VerifySuite::Schur;
    case INVDESC_SUITE_ALL: return invdesc::VerifySuite::All;
  }
  throw std::invalid_argument("unknown verification suite");
}

std::optional<std::size_t> to_k_max(long long k_max) {
  if (k_max < 0) return std::nullopt;
  return static_cast<std::size_t>(k_max);
}

const char* str_or_null(const std::vector<std::string>& v, std::size_t i) {
  return i < v.size() ? v[i].c_str() : nullptr;
}

}  // namespace

extern "C" {

const char* invdesc_version(void) { return INVDESC_VERSION_STRING; }

const char* invdesc_last_error(void) { return g_last_error.c_str(); }

const char* invdesc_status_name(invdesc_status status) {
  switch (status) {
    case INVDESC_OK: return "ok";
    case INVDESC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case INVDESC_ERR_OUT_OF_BOUNDS: return "out of oracle bounds";
    case INVDESC_ERR_INTERNAL: return "internal invariant violated";
    case INVDESC_ERR_NULL_POINTER: return "null pointer";
    case INVDESC_ERR_UNKNOWN: return "unknown error";
  }
  return "unrecognized status";
}

void invdesc_default_bounds(invdesc_bounds* out) {
  if (!out) return;
  invdesc::OracleBounds b;
  *out = {b.yamanouchi_n, b.involution_n, b.ssyt_n, b.ssyt_s, b.standard_n, b.shape_n, b.shape_m};
}

// ---- tables

invdesc_status invdesc_table_compute(invdesc_kind kind, invdesc_method method, size_t n_from,
                                     size_t n_to, long long k_max, const invdesc_bounds* bounds,
                                     invdesc_table** out) {
  if (!out) return fail(INVDESC_ERR_NULL_POINTER, "output handle is null");
  *out = nullptr;
  return guarded([&] {
    const auto label = to_label(kind);
    auto table = invdesc::compute_table(label, to_provenance(kind, method), n_from, n_to,
                                        to_k_max(k_max), to_bounds(bounds));
    auto handle = std::make_unique<invdesc_table>();
    handle->label = invdesc::to_string(table.label());
    handle->provenance = invdesc::to_string(table.provenance());
    for (const auto& row : table.rows()) {
      handle->ns.push_back(row.n);
      auto& values = handle->values.emplace_back();
      values.reserve(row.values.size());
      for (const auto& v : row.values) values.push_back(invdesc::to_decimal(v));
    }
    *out = handle.release();
  });
}

void invdesc_table_free(invdesc_table* table) { delete table; }

const char* invdesc_table_label(const invdesc_table* table) {
  return table ? table->label.c_str() : nullptr;
}

const char* invdesc_table_provenance(const invdesc_table* table) {
  return table ? table->provenance.c_str() : nullptr;
}

size_t invdesc_table_row_count(const invdesc_table* table) { return table ? table->ns.size() : 0; }

size_t invdesc_table_row_n(const invdesc_table* table, size_t row) {
  return table && row < table->ns.size() ? table->ns[row] : 0;
}

size_t invdesc_table_row_length(const invdesc_table* table, size_t row) {
  return table && row < table->values.size() ? table->values[row].size() : 0;
}

const char* invdesc_table_value(const invdesc_table* table, size_t row, size_t k) {
  if (!table || row >= table->values.size()) return nullptr;
  return str_or_null(table->values[row], k);
}

// ---- verification

invdesc_status invdesc_verify(invdesc_suite suite, size_t n_max, int printed_form,
                              const invdesc_bounds* bounds, invdesc_report** out) {
  if (!out) return fail(INVDESC_ERR_NULL_POINTER, "output handle is null");
  *out = nullptr;
  return guarded([&] {
    invdesc::VerifyOptions options;
    options.n_max = n_max;
    options.printed_form = printed_form != 0;
    options.bounds = to_bounds(bounds);
    auto handle = std::make_unique<invdesc_report>();
    handle->report = invdesc::run_verification(to_suite(suite), options);
    *out = handle.release();
  });
}

void invdesc_report_free(invdesc_report* report) { delete report; }

const char* invdesc_report_suite(const invdesc_report* report) {
  return report ? report->report.suite.c_str() : nullptr;
}

size_t invdesc_report_n_max(const invdesc_report* report) { return report ? report->report.n_max : 0; }

int invdesc_report_passed(const invdesc_report* report) { return report && report->report.passed(); }

size_t invdesc_report_check_count(const invdesc_report* report) {
  return report ? report->report.checks.size() : 0;
}

namespace {
const invdesc::CheckResult* check_at(const invdesc_report* report, size_t i) {
  if (!report || i >= report->report.checks.size()) return nullptr;
  return &report->report.checks[i];
}
}  // namespace

const char* invdesc_report_check_identity(const invdesc_report* report, size_t i) {
  auto c = check_at(report, i);
  return c ? c->identity.c_str() : nullptr;
}

const char* invdesc_report_check_range(const invdesc_report* report, size_t i) {
  auto c = check_at(report, i);
  return c ? c->range.c_str() : nullptr;
}

int invdesc_report_check_passed(const invdesc_report* report, size_t i) {
  auto c = check_at(report, i);
  return c && c->passed;
}

const char* invdesc_report_check_witness(const invdesc_report* report, size_t i) {
  auto c = check_at(report, i);
  return c && c->witness ? c->witness->c_str() : nullptr;
}

// ---- scans

invdesc_status invdesc_scan_rows(invdesc_target target, size_t n_from, size_t n_to, long long k_max,
                                 invdesc_scan** out) {
  if (!out) return fail(INVDESC_ERR_NULL_POINTER, "output handle is null");
  *out = nullptr;
  return guarded([&] {
    std::vector<invdesc::ShapeReport> reports;
    switch (target) {
      case INVDESC_TARGET_INVOLUTIONS: reports = invdesc::scan_involution_rows(n_from, n_to); break;
      case INVDESC_TARGET_YAMANOUCHI: reports = invdesc::scan_yamanouchi_rows(n_from, n_to); break;
      case INVDESC_TARGET_SSYT_ROWS:
        reports = invdesc::scan_ssyt_rows(n_from, n_to, to_k_max(k_max));
        break;
      default: throw std::invalid_argument("unknown scan target");
    }
    auto handle = std::make_unique<invdesc_scan>();
    if (!reports.empty()) {
      handle->label = reports.front().sequence_label;
      handle->indexing = reports.front().indexing;
    }
    for (const auto& r : reports) {
      ScanRow row{r.n, r.symmetric, r.unimodal, r.log_concave, {}, {}};
      for (const auto& v : r.sequence) row.values.push_back(invdesc::to_decimal(v));
      for (const auto& v : r.violations) {
        row.violations.push_back({v.index, invdesc::to_decimal(v.outer_product), invdesc::to_decimal(v.square)});
      }
      handle->rows.push_back(std::move(row));
    }
    if (const auto* first = invdesc::first_non_log_concave(reports)) {
      handle->first_violating_n = static_cast<long long>(first->n);
    }
    *out = handle.release();
  });
}

void invdesc_scan_free(invdesc_scan* scan) { delete scan; }

const char* invdesc_scan_label(const invdesc_scan* scan) { return scan ? scan->label.c_str() : nullptr; }

const char* invdesc_scan_indexing(const invdesc_scan* scan) {
  return scan ? scan->indexing.c_str() : nullptr;
}

size_t invdesc_scan_count(const invdesc_scan* scan) { return scan ? scan->rows.size() : 0; }

namespace {
const ScanRow* row_at(const invdesc_scan* scan, size_t i) {
  if (!scan || i >= scan->rows.size()) return nullptr;
  return &scan->rows[i];
}
const ScanViolation* violation_at(const invdesc_scan* scan, size_t i, size_t v) {
  auto row = row_at(scan, i);
  if (!row || v >= row->violations.size()) return nullptr;
  return &row->violations[v];
}
}  // namespace

size_t invdesc_scan_n(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row ? row->n : 0;
}

int invdesc_scan_symmetric(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row && row->symmetric;
}

int invdesc_scan_unimodal(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row && row->unimodal;
}

int invdesc_scan_log_concave(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row && row->log_concave;
}

size_t invdesc_scan_row_length(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row ? row->values.size() : 0;
}

const char* invdesc_scan_row_value(const invdesc_scan* scan, size_t i, size_t k) {
  auto row = row_at(scan, i);
  return row ? str_or_null(row->values, k) : nullptr;
}

size_t invdesc_scan_violation_count(const invdesc_scan* scan, size_t i) {
  auto row = row_at(scan, i);
  return row ? row->violations.size() : 0;
}

size_t invdesc_scan_violation_index(const invdesc_scan* scan, size_t i, size_t v) {
  auto viol = violation_at(scan, i, v);
  return viol ? viol->index : 0;
}

const char* invdesc_scan_violation_outer(const invdesc_scan* scan, size_t i, size_t v) {
  auto viol = violation_at(scan, i, v);
  return viol ? viol->outer.c_str() : nullptr;
}

const char* invdesc_scan_violation_square(const invdesc_scan* scan, size_t i, size_t v) {
  auto viol = violation_at(scan, i, v);
  return viol ? viol->square.c_str() : nullptr;
}

long long invdesc_scan_first_violating_n(const invdesc_scan* scan) {
  return scan ? scan->first_violating_n : -1;
}

}  // extern "C"
