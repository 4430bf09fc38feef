#include "invdesc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "invdesc/analysis.hpp"
#include "invdesc/counting.hpp"
#include "invdesc/symfunc.hpp"
#include "invdesc/tableaux.hpp"
#include "invdesc/words.hpp"

namespace invdesc {

namespace {

struct SuiteName {
  VerifySuite suite;
  const char* name;
};

constexpr SuiteName kSuiteNames[] = {
    {VerifySuite::Bijections, "bijections"},
    {VerifySuite::Symmetry, "symmetry"},
    {VerifySuite::BinomialTransform, "eq2"},
    {VerifySuite::SignedInverse, "eq3"},
    {VerifySuite::ExpandedInverse, "eq4"},
    {VerifySuite::GeneratingFunction, "gf"},
    {VerifySuite::Schur, "schur"},
    {VerifySuite::All, "all"},
};

// Enumeration-heavy checks stop at these sizes even when n_max is larger.
constexpr std::size_t kChiRoundTripN = 10;
constexpr std::size_t kPhiComplementN = 9;
constexpr std::size_t kConjugationN = 10;
constexpr std::size_t kRsBijectionN = 8;
constexpr std::size_t kConjugateTableauN = 8;
constexpr std::size_t kBiwordN = 7, kBiwordS = 5;
constexpr std::size_t kCompositionN = 6, kCompositionS = 6;
constexpr std::size_t kSchurM = 4;

class Recorder {
public:
  Recorder(std::vector<CheckResult>& out, std::string identity, std::string range)
      : out_(out) {
    result_.identity = std::move(identity);
    result_.range = std::move(range);
  }
  Recorder(const Recorder&) = delete;
  ~Recorder() { out_.push_back(std::move(result_)); }

  template <class Witness>
  bool expect(bool ok, Witness&& witness) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
    return ok;
  }
  bool failed() const { return !result_.passed; }

private:
  std::vector<CheckResult>& out_;
  CheckResult result_;
};

std::string upto(const char* var, std::size_t bound) {
  return std::string(var) + " <= " + std::to_string(bound);
}

std::string join(const std::vector<Nat>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].get_str();
  }
  return out + "]";
}

std::size_t clamp_n(std::size_t n_max, std::size_t limit) { return std::min(n_max, limit); }

void bijections(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto& b = o.bounds;
  {
    const std::size_t top = clamp_n(o.n_max, std::min(kChiRoundTripN, b.yamanouchi_n));
    Recorder r(out, "chi(chi_inverse(y)) = y and chi_inverse(chi(T)) = T", upto("n", top));
    for (std::size_t n = 0; n <= top && !r.failed(); ++n) {
      for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
        StandardTableau t = chi_inverse(y);
        r.expect(chi(t) == y && chi_inverse(chi(t)) == t, [&] { return "y = " + y.to_string(); });
      }, b);
    }
  }
  {
    const std::size_t top = clamp_n(o.n_max, std::min(kPhiComplementN, b.involution_n));
    Recorder r(out, "d(phi(sigma)) = n - 1 - d(sigma)", upto("n", top) + ", n >= 1");
    for (std::size_t n = 1; n <= top && !r.failed(); ++n) {
      for_each_involution(n, [&](const Involution& s) {
        r.expect(descent_count(phi(s)) == n - 1 - descent_count(s.word()),
                 [&] { return "sigma = " + s.to_string(); });
      }, b);
    }
  }
  {
    const std::size_t top = clamp_n(o.n_max, std::min(kRsBijectionN, std::min(b.involution_n, b.standard_n)));
    Recorder r(out, "rs_tableau is a bijection from involutions onto standard tableaux", upto("n", top));
    for (std::size_t n = 0; n <= top && !r.failed(); ++n) {
      std::set<StandardTableau> image;
      for_each_involution(n, [&](const Involution& s) { image.insert(rs_tableau(s)); }, b);
      std::set<StandardTableau> all;
      for (const Shape& lambda : partitions(n)) {
        for (auto& t : enumerate_standard(lambda, b)) all.insert(std::move(t));
      }
      r.expect(image == all && Nat(static_cast<unsigned long>(image.size())) == involution_count(n),
               [&] { return "n = " + std::to_string(n) + ": image size " + std::to_string(image.size()) +
                            ", standard tableaux " + std::to_string(all.size()); });
    }
  }
  {
    const std::size_t top = clamp_n(o.n_max, std::min(kConjugationN, b.yamanouchi_n));
    Recorder r(out, "conjugate_word is an involution and complements d to n - 1", upto("n", top) + ", n >= 1");
    for (std::size_t n = 1; n <= top && !r.failed(); ++n) {
      for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
        YamanouchiWord c = conjugate_word(y);
        r.expect(conjugate_word(c) == y && descent_count(c) == n - 1 - descent_count(y),
                 [&] { return "y = " + y.to_string(); });
      }, b);
    }
  }
  {
    const std::size_t top = clamp_n(o.n_max, std::min(kConjugateTableauN, b.yamanouchi_n));
    Recorder r(out, "chi(conjugate_tableau(T)) = conjugate_word(chi(T))", upto("n", top));
    for (std::size_t n = 0; n <= top && !r.failed(); ++n) {
      for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
        StandardTableau t = chi_inverse(y);
        r.expect(chi(conjugate_tableau(t)) == conjugate_word(y), [&] { return "T = " + t.to_string(); });
      }, b);
    }
  }
  {
    const std::size_t top_n = clamp_n(o.n_max, std::min(kBiwordN, b.ssyt_n));
    const std::size_t top_s = std::min(kBiwordS, b.ssyt_s);
    Recorder r(out, "biword_to_ssyt(ssyt_to_biword(T)) = T", upto("n", top_n) + ", " + upto("s", top_s));
    for (std::size_t n = 0; n <= top_n && !r.failed(); ++n) {
      for (std::size_t s = 0; s <= top_s; ++s) {
        for_each_ssyt(n, s, [&](const SemistandardTableau& t) {
          r.expect(biword_to_ssyt(ssyt_to_biword(t)) == t, [&] { return "T = " + t.to_string(); });
        }, b);
      }
    }
  }
  {
    const std::size_t top_n = clamp_n(o.n_max, std::min(kCompositionN, b.ssyt_n));
    const std::size_t top_s = std::min(kCompositionS, b.ssyt_s);
    Recorder r(out, "#{T with s symbols and row word y} = binom(n+s-k-1, n), k = d(y)",
               upto("n", top_n) + ", " + upto("s", top_s));
    for (std::size_t n = 0; n <= top_n && !r.failed(); ++n) {
      for (std::size_t s = 0; s <= top_s; ++s) {
        std::map<YamanouchiWord, std::size_t> per_word;
        for_each_ssyt(n, s, [&](const SemistandardTableau& t) { ++per_word[ssyt_to_biword(t).y()]; }, b);
        for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
          const auto k = static_cast<std::int64_t>(descent_count(y));
          Nat expected = binom(static_cast<std::int64_t>(n + s) - k - 1, static_cast<std::int64_t>(n));
          auto it = per_word.find(y);
          Nat got = static_cast<unsigned long>(it == per_word.end() ? 0 : it->second);
          r.expect(got == expected, [&] {
            return "y = " + y.to_string() + ", s = " + std::to_string(s) + ": " + got.get_str() +
                   " tableaux, binomial " + expected.get_str();
          });
        }, b);
      }
    }
  }
}

void symmetry(const VerifyOptions& o, std::vector<CheckResult>& out) {
  {
    Recorder r(out, "y(n,k) = y(n,n-1-k) and i(n,h) = i(n,n-1-h) (formula rows)", upto("n", o.n_max));
    for (std::size_t n = 0; n <= o.n_max && !r.failed(); ++n) {
      auto y = yamanouchi_row(n);
      auto i = involution_row(n);
      r.expect(is_symmetric(y) && is_symmetric(i), [&] { return "n = " + std::to_string(n) + ": " + join(y); });
    }
  }
  {
    const std::size_t top = clamp_n(o.n_max, std::min(o.bounds.yamanouchi_n, o.bounds.involution_n));
    Recorder r(out, "enumerated y(n,.) rows are symmetric", upto("n", top));
    for (std::size_t n = 0; n <= top && !r.failed(); ++n) {
      auto rows = brute_tables(n, o.bounds);
      r.expect(is_symmetric(rows.y_row), [&] { return "n = " + std::to_string(n) + ": " + join(rows.y_row); });
    }
  }
  {
    Recorder r(out, "i(n,.) rows are unimodal", upto("n", o.n_max));
    for (std::size_t n = 0; n <= o.n_max && !r.failed(); ++n) {
      auto i = involution_row(n);
      r.expect(is_unimodal(i), [&] { return "n = " + std::to_string(n) + ": " + join(i); });
    }
  }
}

void binomial_transform(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::size_t brute_n = clamp_n(o.n_max, std::min(o.bounds.yamanouchi_n, o.bounds.involution_n));
  {
    Recorder r(out, "a(n,s) = sum_k binom(n+k,k) y(n,s-k-1) with enumerated y rows",
               upto("n", brute_n) + ", " + upto("s", o.n_max));
    for (std::size_t n = 0; n <= brute_n && !r.failed(); ++n) {
      auto y = brute_tables(n, o.bounds).y_row;
      for (std::size_t s = 0; s <= o.n_max; ++s) {
        Nat lhs = ssyt_count(n, s), rhs = ssyt_count_from_words(n, s, y);
        r.expect(lhs == rhs, [&] {
          return "n = " + std::to_string(n) + ", s = " + std::to_string(s) + ": " + lhs.get_str() +
                 " vs " + rhs.get_str();
        });
      }
    }
  }
  {
    Recorder r(out, "a(n,s) = sum_k binom(n+k,k) y(n,s-k-1) with formula y rows",
               upto("n", o.n_max) + ", " + upto("s", o.n_max));
    for (std::size_t n = 0; n <= o.n_max && !r.failed(); ++n) {
      auto y = yamanouchi_row_expanded(n);
      for (std::size_t s = 0; s <= o.n_max; ++s) {
        r.expect(ssyt_count(n, s) == ssyt_count_from_words(n, s, y),
                 [&] { return "n = " + std::to_string(n) + ", s = " + std::to_string(s); });
      }
    }
  }
  {
    const std::size_t top_n = clamp_n(o.n_max, o.bounds.ssyt_n);
    const std::size_t top_s = clamp_n(o.n_max, o.bounds.ssyt_s);
    Recorder r(out, "a(n,s): multiset sum = series coefficient = enumerated count",
               upto("n", top_n) + ", " + upto("s", top_s));
    for (std::size_t s = 0; s <= top_s && !r.failed(); ++s) {
      auto series = ssyt_count_series(top_n, s);
      for (std::size_t n = 0; n <= top_n; ++n) {
        Nat f = ssyt_count(n, s), b = brute_ssyt_count(n, s, o.bounds);
        r.expect(f == series[n] && f == b, [&] {
          return "n = " + std::to_string(n) + ", s = " + std::to_string(s) + ": formula " + f.get_str() +
                 ", series " + series[n].get_str() + ", enumeration " + b.get_str();
        });
      }
    }
  }
}

void signed_inverse(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::size_t brute_n = clamp_n(o.n_max, std::min(o.bounds.yamanouchi_n, o.bounds.involution_n));
  {
    Recorder r(out, "signed inverse y rows = enumerated Yamanouchi histograms; i rows = involution histograms",
               upto("n", brute_n));
    for (std::size_t n = 0; n <= brute_n && !r.failed(); ++n) {
      auto brute = brute_tables(n, o.bounds);
      auto y = yamanouchi_row(n);
      auto i = involution_row(n);
      r.expect(y == brute.y_row && i == brute.i_row, [&] {
        return "n = " + std::to_string(n) + ": formula " + join(y) + ", enumeration " + join(brute.y_row);
      });
    }
  }
  {
    Recorder r(out, "formula rows sum to the involution count", upto("n", o.n_max));
    for (std::size_t n = 0; n <= o.n_max && !r.failed(); ++n) {
      Nat total = 0;
      for (const auto& v : yamanouchi_row(n)) total += v;
      r.expect(total == involution_count(n), [&] { return "n = " + std::to_string(n) + ": " + total.get_str(); });
    }
  }
}

void expanded_inverse(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::size_t brute_n = clamp_n(o.n_max, std::min(o.bounds.yamanouchi_n, o.bounds.involution_n));
  if (o.printed_form) {
    Recorder r(out, "misprinted expanded inverse (inner index n+j+2i-1) = enumerated Yamanouchi histograms",
               upto("n", brute_n));
    for (std::size_t n = 0; n <= brute_n && !r.failed(); ++n) {
      auto printed = yamanouchi_row_misprint(n);
      auto brute = brute_tables(n, o.bounds).y_row;
      for (std::size_t k = 0; k < brute.size(); ++k) {
        r.expect(printed[k] == brute[k], [&] {
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": printed form gives " +
                 printed[k].get_str() + ", enumeration gives " + brute[k].get_str() + " (row " +
                 join(printed) + " vs " + join(brute) + ")";
        });
      }
    }
    return;
  }
  {
    Recorder r(out, "expanded inverse y rows = enumerated Yamanouchi histograms", upto("n", brute_n));
    for (std::size_t n = 0; n <= brute_n && !r.failed(); ++n) {
      auto y = yamanouchi_row_expanded(n);
      auto brute = brute_tables(n, o.bounds).y_row;
      r.expect(y == brute, [&] {
        return "n = " + std::to_string(n) + ": formula " + join(y) + ", enumeration " + join(brute);
      });
    }
  }
  {
    Recorder r(out, "expanded inverse = signed inverse", upto("n", o.n_max));
    for (std::size_t n = 0; n <= o.n_max && !r.failed(); ++n) {
      auto a = yamanouchi_row_expanded(n);
      auto b = yamanouchi_row(n);
      r.expect(a == b, [&] { return "n = " + std::to_string(n) + ": " + join(a) + " vs " + join(b); });
    }
  }
}

void generating_function(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder r(out, "sum_s a(n,s) x^s = x I_n(x) / (1-x)^(n+1) up to x^(3n)", upto("n", o.n_max));
  r.expect(verify_gf_relation(0, 3), [] { return std::string("n = 0"); });
  for (std::size_t n = 1; n <= o.n_max && !r.failed(); ++n) {
    r.expect(verify_gf_relation(n, 3 * n), [&] { return "n = " + std::to_string(n); });
  }
}

void schur(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::size_t top_n = clamp_n(o.n_max, o.bounds.shape_n);
  const std::size_t top_m = std::min(kSchurM, o.bounds.shape_m);
  {
    Recorder r(out, "s_lambda = sum_{y in Y(lambda)} L_y", upto("|lambda|", top_n) + ", " + upto("m", top_m));
    for (std::size_t n = 0; n <= top_n; ++n) {
      for (const Shape& lambda : partitions(n)) {
        for (std::size_t m = 0; m <= top_m; ++m) {
          r.expect(verify_schur_identity(lambda, m, o.bounds),
                   [&] { return "lambda = " + lambda.to_string() + ", m = " + std::to_string(m); });
        }
      }
    }
  }
  {
    const std::size_t top = std::min(top_n, std::min(o.bounds.ssyt_n, o.bounds.ssyt_s));
    Recorder r(out, "sum_{lambda |- n} s_lambda(1,...,1) = enumerated a(n,m)", upto("n", top) + ", " + upto("m", top_m));
    for (std::size_t n = 0; n <= top; ++n) {
      for (std::size_t m = 0; m <= top_m; ++m) {
        Nat total = 0;
        for (const Shape& lambda : partitions(n)) total += schur_via_ssyt(lambda, m, o.bounds).evaluate_at_ones();
        Nat brute = brute_ssyt_count(n, m, o.bounds);
        r.expect(total == brute, [&] {
          return "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": " + total.get_str() + " vs " +
                 brute.get_str();
        });
      }
    }
  }
  {
    Recorder r(out, "L_y(1,...,1) = binom(n+m-d(y)-1, n)", upto("n", top_n) + ", " + upto("m", top_m));
    for (std::size_t n = 0; n <= top_n; ++n) {
      for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
        for (std::size_t m = 0; m <= top_m; ++m) {
          Nat got = fundamental_quasisym(y, m, o.bounds).evaluate_at_ones();
          Nat expected = binom(static_cast<std::int64_t>(n + m) - static_cast<std::int64_t>(descent_count(y)) - 1,
                               static_cast<std::int64_t>(n));
          r.expect(got == expected, [&] { return "y = " + y.to_string() + ", m = " + std::to_string(m); });
        }
      }, o.bounds);
    }
  }
}

}  // namespace

const char* to_string(VerifySuite suite) {
  for (const auto& e : kSuiteNames) {
    if (e.suite == suite) return e.name;
  }
  return "?";
}

std::optional<VerifySuite> parse_suite(const std::string& text) {
  for (const auto& e : kSuiteNames) {
    if (text == e.name) return e.suite;
  }
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(VerifySuite suite, const VerifyOptions& options) {
  if (options.n_max > kVerifyMaxN) {
    throw std::invalid_argument("n_max " + std::to_string(options.n_max) + " exceeds the verification limit " +
                                std::to_string(kVerifyMaxN));
  }
  VerifyReport report;
  report.suite = to_string(suite);
  report.n_max = options.n_max;
  auto wants = [&](VerifySuite s) { return suite == s || suite == VerifySuite::All; };
  if (wants(VerifySuite::Bijections)) bijections(options, report.checks);
  if (wants(VerifySuite::Symmetry)) symmetry(options, report.checks);
  if (wants(VerifySuite::BinomialTransform)) binomial_transform(options, report.checks);
  if (wants(VerifySuite::SignedInverse)) signed_inverse(options, report.checks);
  if (wants(VerifySuite::ExpandedInverse)) expanded_inverse(options, report.checks);
  if (wants(VerifySuite::GeneratingFunction)) generating_function(options, report.checks);
  if (wants(VerifySuite::Schur)) schur(options, report.checks);
  return report;
}

}  // namespace invdesc
