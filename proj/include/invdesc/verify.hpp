#pragma once

// Named verification suites: each one checks a family of identities between
// closed formulas, transforms and brute-force enumeration over a range, and
// records the first failing instance.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invdesc/bounds.hpp"

namespace invdesc {

enum class VerifySuite {
  Bijections,          // "bijections"
  Symmetry,            // "symmetry"
  BinomialTransform,   // "eq2"
  SignedInverse,       // "eq3"
  ExpandedInverse,     // "eq4"
  GeneratingFunction,  // "gf"
  Schur,               // "schur"
  All,                 // "all"
};

const char* to_string(VerifySuite suite);
std::optional<VerifySuite> parse_suite(const std::string& text);

struct VerifyOptions {
  std::size_t n_max = 8;
  /// Check the expanded inverse with the misprinted inner binomial instead
  /// of the corrected one. Expected to fail.
  bool printed_form = false;
  OracleBounds bounds{};
};

/// Largest n_max accepted by run_verification.
inline constexpr std::size_t kVerifyMaxN = 100;

struct CheckResult {
  std::string identity;
  std::string range;
  bool passed = true;
  std::optional<std::string> witness;  // first failing instance
};

struct VerifyReport {
  std::string suite;
  std::size_t n_max = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Brute-force portions are clamped to the oracle bounds and to the ranges
/// where enumeration stays fast; the clamped range is stated in each check.
/// Throws std::invalid_argument when n_max exceeds kVerifyMaxN.
VerifyReport run_verification(VerifySuite suite, const VerifyOptions& options);

}  // namespace invdesc
