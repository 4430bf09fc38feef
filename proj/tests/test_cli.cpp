#include <filesystem>

#include "cli_run.hpp"
#include "doctest.h"
#include "json.hpp"

using clirun::contains;
using clirun::run;
namespace fs = std::filesystem;

namespace {

std::string fresh_cache(const std::string& name) {
  const auto dir = clirun::scratch_dir() / name;
  fs::remove_all(dir);
  return dir.string();
}

std::string no_cache_env() { return "INVDESC_CACHE_DIR='" + fresh_cache("default-cache") + "'"; }

}  // namespace

TEST_CASE("tables: exact values as CSV") {
  auto r = run("tables yamanouchi --n 50 --k-max 3 --method formula --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,k,value,provenance\n"
        "50,0,1,formula-eq3\n"
        "50,1,625,formula-eq3\n"
        "50,2,465570,formula-eq3\n"
        "50,3,287306410,formula-eq3\n");

  r = run("tables involutions --n 3 --method brute --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,k,value,provenance\n3,0,1,brute-force\n3,1,2,brute-force\n3,2,1,brute-force\n");

  r = run("tables ssyt --n 45 --k-max 3 --method formula --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "45,1,1,formula-eq1\n45,2,552,formula-eq1\n45,3,307970,formula-eq1\n"));
}

TEST_CASE("tables: JSON carries decimal strings") {
  const auto r = run("tables ssyt --n-from 44 --n-to 45 --k-max 3 --format json --no-cache");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["label"] == "ssyt-a");
  CHECK(j["method"] == "formula");
  CHECK(j["provenance"] == "formula-eq1");
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][1]["n"] == 45);
  CHECK(j["rows"][1]["values"][3].is_string());
  CHECK(j["rows"][1]["values"][3] == "307970");
}

TEST_CASE("tables: --out writes the file") {
  const auto path = (clirun::scratch_dir() / "table.csv").string();
  const auto r = run("tables involutions --n 4 --no-cache --out '" + path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(clirun::slurp(path) ==
        "n,k,value,provenance\n4,0,1,formula-eq3\n4,1,4,formula-eq3\n4,2,4,formula-eq3\n4,3,1,formula-eq3\n");
}

TEST_CASE("tables: usage errors exit 2") {
  CHECK(run("tables ssyt --n 20 --method brute --no-cache").exit_code == 2);
  CHECK(run("tables yamanouchi --n 4 --method series --no-cache").exit_code == 2);
  CHECK(run("tables yamanouchi --n 4 --method transform --no-cache").exit_code == 2);
  CHECK(run("tables ssyt --n 4 --method expanded --no-cache").exit_code == 2);
  CHECK(run("tables ssyt --n-from 5 --n-to 3 --no-cache").exit_code == 2);
  CHECK(run("tables ssyt --n 3 --n-from 1 --n-to 3 --no-cache").exit_code == 2);
  CHECK(run("tables ssyt --no-cache").exit_code == 2);
  CHECK(run("tables sst --n 3").exit_code == 2);
  CHECK(run("tables ssyt --n 3 --format xml").exit_code == 2);
  CHECK(run("tables ssyt --n 3 --unknown").exit_code == 2);
  CHECK(run("tables ssyt --n -1").exit_code == 2);
  CHECK(run("").exit_code == 2);
  const auto r = run("tables involutions --n 13 --method brute --no-cache");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "oracle bound"));
  CHECK(run("tables involutions --n 13 --method brute --no-cache --oracle-bound 13").exit_code == 0);
}

TEST_CASE("cache: hits are byte-identical to fresh runs") {
  const auto dir = fresh_cache("cache-hit");
  const std::string env = "INVDESC_CACHE_DIR='" + dir + "'";
  const auto fresh = run("tables yamanouchi --n 50 --k-max 3", env);
  REQUIRE(fresh.exit_code == 0);
  REQUIRE(fs::is_directory(dir));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().extension() == ".json");
  }
  CHECK(files == 1);
  const auto cached = run("tables yamanouchi --n 50 --k-max 3", env);
  CHECK(cached.out == fresh.out);
  CHECK(cached.err.empty());
  CHECK(run("tables yamanouchi --n 50 --k-max 3 --no-cache", env).out == fresh.out);
  const auto json_fresh = run("tables yamanouchi --n 50 --k-max 3 --format json", env);
  CHECK(nlohmann::json::parse(json_fresh.out)["rows"][0]["values"][1] == "625");
  CHECK(run("tables yamanouchi --n 50 --k-max 3 --format json", env).out == json_fresh.out);
}

TEST_CASE("cache: the cache file is the JSON export") {
  const auto dir = fresh_cache("cache-format");
  const auto exported = run("tables ssyt --n 45 --k-max 3 --format json --no-cache");
  run("tables ssyt --n 45 --k-max 3 --cache-dir '" + dir + "'");
  for (const auto& e : fs::directory_iterator(dir)) CHECK(clirun::slurp(e.path()) == exported.out);
}

TEST_CASE("cache: corrupt entries are recomputed with a warning") {
  const auto dir = fresh_cache("cache-corrupt");
  const std::string env = "INVDESC_CACHE_DIR='" + dir + "'";
  const auto fresh = run("tables ssyt --n 45 --k-max 3", env);
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{\"rows\": [";
  const auto again = run("tables ssyt --n 45 --k-max 3", env);
  CHECK(again.exit_code == 0);
  CHECK(again.out == fresh.out);
  CHECK(contains(again.err, "warning"));
  // The entry was rewritten, so the next run is silent.
  CHECK(run("tables ssyt --n 45 --k-max 3", env).err.empty());

  // Well-formed JSON with a tampered value is also rejected.
  for (const auto& e : fs::directory_iterator(dir)) {
    auto j = nlohmann::ordered_json::parse(clirun::slurp(e.path()));
    j["rows"][0]["values"][2] = 552;
    std::ofstream(e.path()) << j.dump(2);
  }
  const auto tampered = run("tables ssyt --n 45 --k-max 3", env);
  CHECK(tampered.out == fresh.out);
  CHECK(contains(tampered.err, "warning"));
}

TEST_CASE("cache: --cache-dir overrides the environment") {
  const auto env_dir = fresh_cache("cache-env");
  const auto flag_dir = fresh_cache("cache-flag");
  run("tables involutions --n 5 --cache-dir '" + flag_dir + "'", "INVDESC_CACHE_DIR='" + env_dir + "'");
  CHECK(fs::exists(flag_dir));
  CHECK_FALSE(fs::exists(env_dir));
}

TEST_CASE("verify") {
  auto r = run("verify all --n-max 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["suite"] == "all");
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK(c["identity"].is_string());
    CHECK(c["range"].is_string());
  }

  CHECK(run("verify symmetry --n-max 40").exit_code == 0);

  r = run("verify eq4 --printed-form --n-max 4");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "n = 2, k = 1"));
  CHECK(nlohmann::json::parse(r.out)["passed"] == false);
  CHECK(run("verify eq4 --n-max 4").exit_code == 0);

  CHECK(run("verify eq9").exit_code == 2);
  CHECK(run("verify all --n-max 101").exit_code == 2);
}

TEST_CASE("counterexample") {
  auto r = run("counterexample involutions --n-from 45 --n-to 55");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n = 50: not log-concave"));
  CHECK(contains(r.out, "390625 < 465570"));
  CHECK(contains(r.out, "minimal non-log-concave n in range: 45"));

  r = run("counterexample ssyt-rows --n-from 40 --n-to 50");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n = 45: not log-concave"));
  CHECK(contains(r.out, "304704 < 307970"));
  CHECK(contains(r.out, "minimal non-log-concave n in range: 45"));

  r = run("counterexample involutions --n-from 2 --n-to 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "no row in range fails log-concavity"));

  r = run("counterexample yamanouchi --n-from 30 --n-to 60 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["minimal_n"] == 39);
  CHECK(j["expected_found"] == true);

  r = run("counterexample ssyt-rows --n-from 45 --n-to 45 --k-max 3 --format csv");
  CHECK(r.out == "n,index,square,outer_product\n45,2,304704,307970\n");

  CHECK(run("counterexample involutions --n-from 10 --n-to 2").exit_code == 2);
  CHECK(run("counterexample involutions --n-from 2").exit_code == 2);
  CHECK(run("counterexample permutations --n-from 2 --n-to 3").exit_code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* args : {"counterexample involutions --n-from 45 --n-to 55",
                           "counterexample ssyt-rows --n-from 40 --n-to 50 --format json",
                           "verify all --n-max 6", "tables ssyt --n-from 0 --n-to 12 --no-cache"}) {
    CAPTURE(args);
    const auto a = run(args, no_cache_env());
    const auto b = run(args, no_cache_env());
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
