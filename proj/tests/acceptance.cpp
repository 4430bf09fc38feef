// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cli_run.hpp"
#include "invdesc/analysis.hpp"
#include "invdesc/counting.hpp"
#include "invdesc/symfunc.hpp"
#include "invdesc/tableaux.hpp"
#include "invdesc/verify.hpp"
#include "invdesc/words.hpp"

using namespace invdesc;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0) o.expect(elapsed < limit_seconds, "took " + std::to_string(elapsed) + " s");
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, elapsed,
              o.ok ? "" : " -- ", o.note.c_str());
  std::fflush(stdout);
}

std::size_t to_size(long long v) { return static_cast<std::size_t>(v); }

}  // namespace

int main() {
  criterion(1, "ssyt row n = 45 is not log-concave at k = 2", 1.0, [](Outcome& o) {
    const Nat a1 = ssyt_count(45, 1), a2 = ssyt_count(45, 2), a3 = ssyt_count(45, 3);
    o.expect(a1 == 1, "a(45,1) = " + a1.get_str());
    o.expect(a2 == 552, "a(45,2) = " + a2.get_str());
    o.expect(a3 == 307970, "a(45,3) = " + a3.get_str());
    o.expect(a2 * a2 == 304704, "a(45,2)^2 = " + Nat(a2 * a2).get_str());
    o.expect(a2 * a2 < a1 * a3, "inequality");
    const auto v = log_concavity_violations(std::vector<Nat>{a1, a2, a3});
    o.expect(v.size() == 1 && v[0].square == 304704 && v[0].outer_product == 307970, "checker witness");
  });

  criterion(2, "involution row n = 50 is not log-concave", 1.0, [](Outcome& o) {
    const Nat y0 = yamanouchi_count(50, 0), y1 = yamanouchi_count(50, 1), y2 = yamanouchi_count(50, 2);
    o.expect(y0 == 1 && y1 == 625 && y2 == 465570, "y(50,0..2) = " + y0.get_str() + ", " + y1.get_str() + ", " +
                                                       y2.get_str());
    o.expect(y1 * y1 == 390625 && y1 * y1 < y0 * y2, "inequality");
    const auto i = involution_row(50);
    const auto v = log_concavity_violations(i);
    bool mirrored = false;
    for (const auto& w : v) mirrored |= w.index == 48 && w.square == 390625 && w.outer_product == 465570;
    o.expect(mirrored, "no violation of I_50 at h = 48");
  });

  criterion(3, "formulas, transforms and enumeration agree", 120.0, [](Outcome& o) {
    for (std::size_t n = 0; n <= 10 && o.ok; ++n) {
      const auto brute = brute_tables(n);
      o.expect(yamanouchi_row(n) == brute.y_row, "signed inverse, n = " + std::to_string(n));
      o.expect(yamanouchi_row_expanded(n) == brute.y_row, "expanded inverse, n = " + std::to_string(n));
      o.expect(involution_row(n) == brute.i_row, "involution row, n = " + std::to_string(n));
    }
    for (std::size_t s = 0; s <= 8; ++s) {
      const auto series = ssyt_count_series(8, s);
      for (std::size_t n = 0; n <= 8 && o.ok; ++n) {
        const Nat a = ssyt_count(n, s);
        const std::string at = "n = " + std::to_string(n) + ", s = " + std::to_string(s);
        o.expect(series[n] == a, "series " + at);
        o.expect(ssyt_count_from_words(n, s, yamanouchi_row(n)) == a, "transform " + at);
        o.expect(brute_ssyt_count(n, s) == a, "enumeration " + at);
      }
    }
  });

  criterion(4, "bijection properties", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 9; ++n) {
      for_each_involution(n, [&](const Involution& s) {
        o.expect(descent_count(phi(s)) == n - 1 - descent_set_involution(s).size(), "phi at " + s.to_string());
      });
    }
    for (std::size_t n = 1; n <= 10; ++n) {
      for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
        const auto c = conjugate_word(y);
        o.expect(conjugate_word(c) == y && descent_count(y) + descent_count(c) == n - 1,
                 "conjugation at " + y.to_string());
      });
    }
    for (std::size_t n = 0; n <= 7; ++n) {
      for (std::size_t s = 1; s <= 5; ++s) {
        for_each_ssyt(n, s, [&](const SemistandardTableau& t) {
          o.expect(biword_to_ssyt(ssyt_to_biword(t)) == t, "biword round trip at " + t.to_string());
        });
      }
    }
    // Each tableau is counted under its row word; the composition side must
    // produce binom(n+s-k-1, n) of them.
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t s = 1; s <= 6; ++s) {
        std::map<YamanouchiWord, std::size_t> per_word;
        for_each_ssyt(n, s, [&](const SemistandardTableau& t) {
          const auto b = ssyt_to_biword(t);
          const auto dp = delta_prime(delta_encoding(b), weak_descent_set(b.y()));
          o.expect(ssyt_from_word_and_composition(b.y(), dp, s) == t, "composition inverse at " + t.to_string());
          ++per_word[b.y()];
        });
        for_each_yamanouchi(n, [&](const YamanouchiWord& y) {
          const auto k = static_cast<long long>(descent_count(y));
          const Nat expected = binom(static_cast<long long>(n + s) - k - 1, static_cast<long long>(n));
          o.expect(expected == Nat(static_cast<unsigned long>(per_word[y])),
                   "count for y = " + y.to_string() + ", s = " + std::to_string(s));
        });
      }
    }
  });

  criterion(5, "symmetry of y rows and unimodality of i rows for n <= 40", 0, [](Outcome& o) {
    for (std::size_t n = 0; n <= 40; ++n) {
      o.expect(is_symmetric(yamanouchi_row(n)), "y row not symmetric at n = " + std::to_string(n));
      o.expect(is_unimodal(involution_row(n)), "i row not unimodal at n = " + std::to_string(n));
    }
  });

  criterion(6, "generating function relation, order 3n, 1 <= n <= 20", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 20; ++n) o.expect(verify_gf_relation(n, 3 * n), "n = " + std::to_string(n));
  });

  criterion(7, "Schur expansion and specialization, |lambda| <= 6, m <= 4", 60.0, [](Outcome& o) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (std::size_t m = 1; m <= 4; ++m) {
        Nat total = 0;
        for (const auto& lambda : partitions(n)) {
          o.expect(verify_schur_identity(lambda, m), lambda.to_string() + ", m = " + std::to_string(m));
          total += schur_via_ssyt(lambda, m).evaluate_at_ones();
        }
        o.expect(total == brute_ssyt_count(n, m), "specialization n = " + std::to_string(n));
      }
    }
  });

  criterion(8, "printed double sum is refuted, corrected one holds", 0, [](Outcome& o) {
    bool disagrees = false;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto printed = yamanouchi_row_misprint(n);
      const auto brute = brute_tables(n).y_row;
      disagrees |= printed != std::vector<Int>(brute.begin(), brute.end());
    }
    o.expect(disagrees, "printed form matched enumeration for n <= 4");
    for (std::size_t n = 0; n <= 12; ++n) {
      o.expect(yamanouchi_row_expanded(n) == brute_tables(n).y_row, "corrected form at n = " + std::to_string(n));
    }
    for (std::size_t n = 13; n <= 60; ++n) {
      o.expect(yamanouchi_row_expanded(n) == yamanouchi_row(n), "corrected form at n = " + std::to_string(n));
    }
    const auto r = clirun::run("verify eq4 --printed-form --n-max 4");
    o.expect(r.exit_code == 1, "CLI exit " + std::to_string(r.exit_code));
    o.expect(clirun::contains(r.err, "printed form gives 5, enumeration gives 1"), "CLI witness missing");
  });

  criterion(9, "CLI contract", 0, [](Outcome& o) {
    const auto cache = (clirun::scratch_dir() / "acceptance-cache").string();
    const std::string env = "INVDESC_CACHE_DIR='" + cache + "'";
    struct Case {
      std::string args;
      int exit_code;
      std::vector<std::string> needles;
    };
    const std::vector<Case> cases = {
        {"tables yamanouchi --n 50 --k-max 3 --method formula", 0,
         {"50,0,1,formula-eq3\n50,1,625,formula-eq3\n50,2,465570,formula-eq3\n"}},
        {"tables involutions --n 3 --method brute", 0,
         {"3,0,1,brute-force\n3,1,2,brute-force\n3,2,1,brute-force\n"}},
        {"tables ssyt --n 45 --k-max 3 --method formula", 0,
         {"45,1,1,formula-eq1\n45,2,552,formula-eq1\n45,3,307970,formula-eq1\n"}},
        {"counterexample involutions --n-from 45 --n-to 55", 0, {"n = 50: not log-concave", "390625 < 465570"}},
        {"counterexample ssyt-rows --n-from 40 --n-to 50", 0, {"n = 45: not log-concave", "304704 < 307970"}},
        {"counterexample involutions --n-from 2 --n-to 10", 0, {"no row in range fails log-concavity"}},
        {"verify all --n-max 8", 0, {"\"passed\": true"}},
        {"verify symmetry --n-max 40", 0, {"\"passed\": true"}},
        {"verify eq4 --printed-form --n-max 4", 1, {"\"passed\": false"}},
        {"tables ssyt --n 20 --method brute", 2, {}},
        {"tables yamanouchi --n 4 --method series", 2, {}},
        {"counterexample involutions --n-from 10 --n-to 2", 2, {}},
    };
    for (const auto& c : cases) {
      const auto first = clirun::run(c.args, env);
      const auto second = clirun::run(c.args, env);
      o.expect(first.exit_code == c.exit_code, "'" + c.args + "' exited " + std::to_string(first.exit_code));
      o.expect(first.out == second.out && first.exit_code == second.exit_code, "'" + c.args + "' not repeatable");
      for (const auto& needle : c.needles) o.expect(clirun::contains(first.out, needle), "'" + c.args + "' output");
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
