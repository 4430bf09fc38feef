// invdesc command-line front end. Talks to the library only through the C
// interface in invdesc/invdesc.h.
//
// Exit codes: 0 success, 1 verification failure or missing expected
// counterexample, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "invdesc/invdesc.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class CliError : public std::runtime_error {
public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

// Status from the C API -> exit code.
void check(invdesc_status status) {
  if (status == INVDESC_OK) return;
  std::string message = invdesc_last_error();
  if (message.empty()) message = invdesc_status_name(status);
  const int code = status == INVDESC_ERR_INVALID_ARGUMENT || status == INVDESC_ERR_OUT_OF_BOUNDS
                       ? kExitUsage
                       : kExitFailure;
  throw CliError(code, message);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using TablePtr = std::unique_ptr<invdesc_table, Deleter<invdesc_table, invdesc_table_free>>;
using ReportPtr = std::unique_ptr<invdesc_report, Deleter<invdesc_report, invdesc_report_free>>;
using ScanPtr = std::unique_ptr<invdesc_scan, Deleter<invdesc_scan, invdesc_scan_free>>;

struct CommonOptions {
  std::string format;
  std::string out_path;
  std::optional<std::size_t> oracle_bound;
};

invdesc_bounds make_bounds(const CommonOptions& o) {
  invdesc_bounds b;
  invdesc_default_bounds(&b);
  if (o.oracle_bound) {
    b.yamanouchi_n = b.involution_n = b.ssyt_n = b.standard_n = *o.oracle_bound;
  }
  return b;
}

void emit(const CommonOptions& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw CliError(kExitUsage, "cannot write " + o.out_path);
  f << text;
}

// ---------------------------------------------------------------------------
// tables

const std::map<std::string, invdesc_kind> kKinds = {
    {"involutions", INVDESC_KIND_INVOLUTIONS},
    {"yamanouchi", INVDESC_KIND_YAMANOUCHI},
    {"ssyt", INVDESC_KIND_SSYT},
};

const std::map<std::string, invdesc_method> kMethods = {
    {"formula", INVDESC_METHOD_FORMULA},   {"series", INVDESC_METHOD_SERIES},
    {"transform", INVDESC_METHOD_TRANSFORM}, {"brute", INVDESC_METHOD_BRUTE},
    {"expanded", INVDESC_METHOD_EXPANDED},
};

// Header fields a cached block must carry; unsupported pairs never reach the
// cache because the library rejects them first.
std::string expected_label(const std::string& kind) {
  if (kind == "involutions") return "involutions-i";
  if (kind == "yamanouchi") return "yamanouchi-y";
  return "ssyt-a";
}

std::string expected_provenance(const std::string& kind, const std::string& method) {
  if (method == "brute") return "brute-force";
  if (method == "series") return "series-Fk";
  if (method == "transform") return "transform-eq2";
  if (method == "expanded") return "formula-eq4";
  return kind == "ssyt" ? "formula-eq1" : "formula-eq3";
}

struct TableRowText {
  std::size_t n = 0;
  std::vector<std::string> values;
};

struct TableData {
  std::string label;
  std::string method;
  std::string provenance;
  std::vector<TableRowText> rows;
};

struct TablesOptions {
  CommonOptions common;
  std::string kind;
  std::string method = "formula";
  std::optional<std::size_t> n, n_from, n_to, k_max;
  bool no_cache = false;
  std::string cache_dir;
};

Json table_to_json(const TableData& t) {
  Json j;
  j["label"] = t.label;
  j["method"] = t.method;
  j["provenance"] = t.provenance;
  j["rows"] = Json::array();
  for (const auto& row : t.rows) {
    j["rows"].push_back({{"n", row.n}, {"values", row.values}});
  }
  return j;
}

bool is_decimal(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// Returns nullopt when the document does not describe the requested block.
std::optional<TableData> table_from_json(const Json& j, const TableData& expected_header,
                                         std::size_t n_from, std::size_t n_to) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) return std::nullopt;
  TableData t;
  t.label = j.value("label", "");
  t.method = j.value("method", "");
  t.provenance = j.value("provenance", "");
  if (t.label != expected_header.label || t.method != expected_header.method ||
      t.provenance != expected_header.provenance) {
    return std::nullopt;
  }
  const auto& rows = j["rows"];
  if (rows.size() != n_to - n_from + 1) return std::nullopt;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!r.is_object() || !r.contains("n") || !r["n"].is_number_unsigned() || !r.contains("values") ||
        !r["values"].is_array()) {
      return std::nullopt;
    }
    TableRowText row;
    row.n = r["n"].get<std::size_t>();
    if (row.n != n_from + i) return std::nullopt;
    for (const auto& v : r["values"]) {
      if (!v.is_string() || !is_decimal(v.get<std::string>())) return std::nullopt;
      row.values.push_back(v.get<std::string>());
    }
    if (row.values.empty()) return std::nullopt;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_csv(const TableData& t) {
  std::string out = "n,k,value,provenance\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      out += std::to_string(row.n) + "," + std::to_string(k) + "," + row.values[k] + "," + t.provenance + "\n";
    }
  }
  return out;
}

std::optional<fs::path> resolve_cache_dir(const TablesOptions& o) {
  if (o.no_cache) return std::nullopt;
  if (!o.cache_dir.empty()) return fs::path(o.cache_dir);
  if (const char* env = std::getenv("INVDESC_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "invdesc";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "invdesc";
  return std::nullopt;
}

std::string cache_key(const TablesOptions& o, std::size_t n_from, std::size_t n_to) {
  std::ostringstream key;
  key << o.kind << "-" << o.method << "-n" << n_from << "-" << n_to << "-k";
  if (o.k_max) key << *o.k_max;
  else key << "full";
  key << "-v" << invdesc_version() << ".json";
  return key.str();
}

TableData compute_fresh(const TablesOptions& o, std::size_t n_from, std::size_t n_to) {
  const invdesc_bounds bounds = make_bounds(o.common);
  invdesc_table* raw = nullptr;
  check(invdesc_table_compute(kKinds.at(o.kind), kMethods.at(o.method), n_from, n_to,
                              o.k_max ? static_cast<long long>(*o.k_max) : -1, &bounds, &raw));
  TablePtr table(raw);
  TableData t;
  t.label = invdesc_table_label(table.get());
  t.method = o.method;
  t.provenance = invdesc_table_provenance(table.get());
  for (std::size_t r = 0; r < invdesc_table_row_count(table.get()); ++r) {
    TableRowText row;
    row.n = invdesc_table_row_n(table.get(), r);
    for (std::size_t k = 0; k < invdesc_table_row_length(table.get(), r); ++k) {
      row.values.emplace_back(invdesc_table_value(table.get(), r, k));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

int run_tables(TablesOptions& o) {
  std::size_t n_from = 0, n_to = 0;
  if (o.n) {
    if (o.n_from || o.n_to) throw CliError(kExitUsage, "--n cannot be combined with --n-from/--n-to");
    n_from = n_to = *o.n;
  } else if (o.n_from && o.n_to) {
    n_from = *o.n_from;
    n_to = *o.n_to;
  } else {
    throw CliError(kExitUsage, "give --n, or both --n-from and --n-to");
  }
  if (n_from > n_to) throw CliError(kExitUsage, "--n-from must not exceed --n-to");

  std::optional<TableData> table;
  const auto cache_dir = resolve_cache_dir(o);
  fs::path cache_file;
  if (cache_dir) {
    cache_file = *cache_dir / cache_key(o, n_from, n_to);
    std::error_code ec;
    if (fs::exists(cache_file, ec)) {
      std::ifstream in(cache_file, std::ios::binary);
      Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
      TableData header;
      header.label = expected_label(o.kind);
      header.method = o.method;
      header.provenance = expected_provenance(o.kind, o.method);
      table = table_from_json(doc, header, n_from, n_to);
      if (!table) {
        std::cerr << "warning: discarding corrupt cache entry " << cache_file.string() << "\n";
      }
    }
  }

  if (!table) {
    table = compute_fresh(o, n_from, n_to);
    if (cache_dir) {
      std::error_code ec;
      fs::create_directories(*cache_dir, ec);
      fs::path tmp = cache_file;
      tmp += ".tmp";
      {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (f) f << table_to_json(*table).dump(2) << "\n";
      }
      fs::rename(tmp, cache_file, ec);
      if (ec) std::cerr << "warning: could not write cache entry " << cache_file.string() << "\n";
    }
  }

  if (o.common.format == "json") {
    emit(o.common, table_to_json(*table).dump(2) + "\n");
  } else {
    emit(o.common, render_csv(*table));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

const std::map<std::string, invdesc_suite> kSuites = {
    {"bijections", INVDESC_SUITE_BIJECTIONS}, {"symmetry", INVDESC_SUITE_SYMMETRY},
    {"eq2", INVDESC_SUITE_EQ2},               {"eq3", INVDESC_SUITE_EQ3},
    {"eq4", INVDESC_SUITE_EQ4},               {"gf", INVDESC_SUITE_GF},
    {"schur", INVDESC_SUITE_SCHUR},           {"all", INVDESC_SUITE_ALL},
};

struct VerifyCliOptions {
  CommonOptions common;
  std::string suite;
  std::size_t n_max = 8;
  bool printed_form = false;
};

int run_verify(VerifyCliOptions& o) {
  const invdesc_bounds bounds = make_bounds(o.common);
  invdesc_report* raw = nullptr;
  check(invdesc_verify(kSuites.at(o.suite), o.n_max, o.printed_form ? 1 : 0, &bounds, &raw));
  ReportPtr report(raw);

  Json j;
  j["suite"] = invdesc_report_suite(report.get());
  j["n_max"] = invdesc_report_n_max(report.get());
  j["printed_form"] = o.printed_form;
  j["passed"] = invdesc_report_passed(report.get()) != 0;
  j["checks"] = Json::array();
  const std::size_t count = invdesc_report_check_count(report.get());
  for (std::size_t i = 0; i < count; ++i) {
    Json c;
    c["identity"] = invdesc_report_check_identity(report.get(), i);
    c["range"] = invdesc_report_check_range(report.get(), i);
    c["passed"] = invdesc_report_check_passed(report.get(), i) != 0;
    const char* witness = invdesc_report_check_witness(report.get(), i);
    c["witness"] = witness ? Json(witness) : Json(nullptr);
    j["checks"].push_back(std::move(c));
  }
  emit(o.common, j.dump(2) + "\n");

  if (invdesc_report_passed(report.get())) return kExitOk;
  for (std::size_t i = 0; i < count; ++i) {
    if (invdesc_report_check_passed(report.get(), i)) continue;
    std::cerr << "FAILED: " << invdesc_report_check_identity(report.get(), i) << " ["
              << invdesc_report_check_range(report.get(), i) << "]\n  counterexample: "
              << invdesc_report_check_witness(report.get(), i) << "\n";
    break;
  }
  return kExitFailure;
}

// ---------------------------------------------------------------------------
// counterexample

struct Target {
  invdesc_target target;
  std::size_t expected_n;  // row known not to be log-concave
};

const std::map<std::string, Target> kTargets = {
    {"involutions", {INVDESC_TARGET_INVOLUTIONS, 50}},
    {"yamanouchi", {INVDESC_TARGET_YAMANOUCHI, 50}},
    {"ssyt-rows", {INVDESC_TARGET_SSYT_ROWS, 45}},
};

struct CounterexampleOptions {
  CommonOptions common;
  std::string target;
  std::size_t n_from = 0, n_to = 0;
  std::optional<std::size_t> k_max;
};

int run_counterexample(CounterexampleOptions& o) {
  if (o.n_from > o.n_to) throw CliError(kExitUsage, "--n-from must not exceed --n-to");
  const Target& target = kTargets.at(o.target);
  invdesc_scan* raw = nullptr;
  check(invdesc_scan_rows(target.target, o.n_from, o.n_to, o.k_max ? static_cast<long long>(*o.k_max) : -1,
                          &raw));
  ScanPtr scan(raw);

  const bool expected_in_range = o.n_from <= target.expected_n && target.expected_n <= o.n_to;
  bool expected_found = false;
  const long long minimal = invdesc_scan_first_violating_n(scan.get());

  Json violating = Json::array();
  std::string text;
  text += std::string("target: ") + invdesc_scan_label(scan.get()) + " (" + invdesc_scan_indexing(scan.get()) +
          ")\n";
  text += "range: n = " + std::to_string(o.n_from) + ".." + std::to_string(o.n_to) + "\n";
  std::string csv = "n,index,square,outer_product\n";
  for (std::size_t i = 0; i < invdesc_scan_count(scan.get()); ++i) {
    if (invdesc_scan_log_concave(scan.get(), i)) continue;
    const std::size_t n = invdesc_scan_n(scan.get(), i);
    if (n == target.expected_n) expected_found = true;
    Json row{{"n", n}, {"violations", Json::array()}};
    text += "n = " + std::to_string(n) + ": not log-concave\n";
    for (std::size_t v = 0; v < invdesc_scan_violation_count(scan.get(), i); ++v) {
      const std::size_t idx = invdesc_scan_violation_index(scan.get(), i, v);
      const std::string square = invdesc_scan_violation_square(scan.get(), i, v);
      const std::string outer = invdesc_scan_violation_outer(scan.get(), i, v);
      row["violations"].push_back({{"index", idx}, {"square", square}, {"outer_product", outer}});
      text += "  index " + std::to_string(idx) + ": s[" + std::to_string(idx) + "]^2 = " + square + " < " + outer +
              " = s[" + std::to_string(idx - 1) + "]*s[" + std::to_string(idx + 1) + "]\n";
      csv += std::to_string(n) + "," + std::to_string(idx) + "," + square + "," + outer + "\n";
    }
    violating.push_back(std::move(row));
  }
  if (minimal < 0) text += "no row in range fails log-concavity\n";
  else text += "minimal non-log-concave n in range: " + std::to_string(minimal) + "\n";
  if (expected_in_range) {
    text += "known counterexample n = " + std::to_string(target.expected_n) + ": " +
            (expected_found ? "found" : "MISSING") + "\n";
  }

  if (o.common.format == "json") {
    Json j;
    j["target"] = o.target;
    j["label"] = invdesc_scan_label(scan.get());
    j["indexing"] = invdesc_scan_indexing(scan.get());
    j["n_from"] = o.n_from;
    j["n_to"] = o.n_to;
    j["violating"] = std::move(violating);
    j["minimal_n"] = minimal < 0 ? Json(nullptr) : Json(minimal);
    j["expected_n"] = target.expected_n;
    j["expected_in_range"] = expected_in_range;
    j["expected_found"] = expected_found;
    emit(o.common, j.dump(2) + "\n");
  } else if (o.common.format == "csv") {
    emit(o.common, csv);
  } else {
    emit(o.common, text);
  }
  return expected_in_range && !expected_found ? kExitFailure : kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--oracle-bound", o.oracle_bound, "Size limit for exhaustive enumeration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descent statistics on involutions, Yamanouchi words and tableaux"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(invdesc_version()));

  TablesOptions tables;
  tables.common.format = "csv";
  auto* tables_cmd = app.add_subcommand("tables", "Compute a block of count-table rows");
  tables_cmd->add_option("kind", tables.kind, "involutions | yamanouchi | ssyt")
      ->required()
      ->check(CLI::IsMember({"involutions", "yamanouchi", "ssyt"}));
  tables_cmd->add_option("--n", tables.n, "Single row");
  tables_cmd->add_option("--n-from", tables.n_from, "First row");
  tables_cmd->add_option("--n-to", tables.n_to, "Last row");
  tables_cmd->add_option("--k-max", tables.k_max, "Last column");
  tables_cmd->add_option("--method", tables.method, "formula | series | transform | brute | expanded")
      ->check(CLI::IsMember({"formula", "series", "transform", "brute", "expanded"}));
  tables_cmd->add_flag("--no-cache", tables.no_cache, "Recompute even if a cached block exists");
  tables_cmd->add_option("--cache-dir", tables.cache_dir,
                         "Cache directory (default: $INVDESC_CACHE_DIR, else the user cache dir)");
  add_common(tables_cmd, tables.common, {"csv", "json"});

  VerifyCliOptions verify;
  verify.common.format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; prints a JSON report");
  verify_cmd->add_option("suite", verify.suite, "bijections | symmetry | eq2 | eq3 | eq4 | gf | schur | all")
      ->required()
      ->check(CLI::IsMember({"bijections", "symmetry", "eq2", "eq3", "eq4", "gf", "schur", "all"}));
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n checked");
  verify_cmd->add_flag("--printed-form", verify.printed_form,
                       "eq4: check the misprinted inner binomial n+j+2i-1 instead of n+j-2i-1");
  add_common(verify_cmd, verify.common, {"json"});

  CounterexampleOptions cex;
  cex.common.format = "text";
  auto* cex_cmd = app.add_subcommand("counterexample", "Scan rows for log-concavity failures");
  cex_cmd->add_option("target", cex.target, "involutions | yamanouchi | ssyt-rows")
      ->required()
      ->check(CLI::IsMember({"involutions", "yamanouchi", "ssyt-rows"}));
  cex_cmd->add_option("--n-from", cex.n_from, "First row")->required();
  cex_cmd->add_option("--n-to", cex.n_to, "Last row")->required();
  cex_cmd->add_option("--k-max", cex.k_max, "ssyt-rows: last column (default n)");
  add_common(cex_cmd, cex.common, {"text", "csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (tables_cmd->parsed()) return run_tables(tables);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (cex_cmd->parsed()) return run_counterexample(cex);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
