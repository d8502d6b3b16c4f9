#include <set>

#include "doctest.h"
#include "tpow/exact.hpp"
#include "tpow/suites.hpp"

using namespace tpow;

namespace {

SuiteConfig config(const std::string& suite, std::map<std::string, std::string> params = {}) {
  SuiteConfig c;
  c.suite = suite;
  c.params = std::move(params);
  return c;
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = suite_registry();
  CHECK(reg.size() >= 14);
  std::set<std::string> names;
  for (const auto& s : reg) {
    CHECK_FALSE(s.anchor.empty());
    CHECK(names.insert(s.name).second);
    CHECK(find_suite(s.name) == &s);
  }
  CHECK(find_suite("nonexistent") == nullptr);
  CHECK(find_suite("kunneth")->anchor.find("Kunneth") != std::string::npos);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_suite(config("nonexistent")), ConfigError);
  CHECK_THROWS_AS(run_suite(config("kunneth", {{"q", "1"}})), ConfigError);
  CHECK_THROWS_AS(run_suite(config("kunneth", {{"l", "9"}})), ConfigError);
  CHECK_THROWS_AS(run_suite(config("kunneth", {{"l", "two"}})), ConfigError);
  CHECK_THROWS_AS(run_suite(config("binomial-identity", {{"l", "12"}})), ConfigError);
  CHECK_THROWS_AS(run_suite(config("gbundle-rr", {{"group", "A5"}})), ConfigError);
  SuiteConfig b = config("kunneth");
  b.bound = 3;
  CHECK_THROWS_AS(run_suite(b), ConfigError);
}

TEST_CASE("documented suite instances") {
  auto r = run_suite(config("adams-congruence", {{"l", "3"}, {"n", "1"}}));
  CHECK(r.all_pass());
  CHECK(r.params.at("l") == "3");
  CHECK(r.params.at("n") == "1");
  for (const auto& c : r.checks) CHECK(c.witness.has_value());
  auto b = run_suite(config("binomial-identity", {{"l", "13"}}));
  CHECK(b.all_pass());
  REQUIRE(b.checks.size() == 1);
  CHECK(b.checks[0].left == "-1");
}

TEST_CASE("reports are deterministic and order-preserving") {
  std::vector<SuiteConfig> cfgs = {config("tau-mult", {{"l", "2"}}), config("charp"), config("k1-tensor")};
  cfgs[0].seed = 11;
  auto seq = run_suites(cfgs, 1);
  auto par = run_suites(cfgs, 3);
  REQUIRE(seq.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(seq[i].suite == cfgs[i].suite);
    CHECK(report_json(seq[i], false) == report_json(par[i], false));
    CHECK(report_text(seq[i], false) == report_text(par[i], false));
  }
  CHECK(seq[0].params.at("seed") == "11");
  auto other = run_suite([&] {
    auto c = cfgs[0];
    c.seed = 12;
    return c;
  }());
  CHECK(report_json(other, false) != report_json(seq[0], false));
}

TEST_CASE("report rendering") {
  Report r;
  r.suite = "x";
  r.anchor = "a";
  r.add("one", true, "1", "1");
  r.add("two", false, "1", "2", std::string("w"));
  CHECK_FALSE(r.all_pass());
  CHECK(r.failures() == 1);
  auto j = report_json(r, false);
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"witness\": \"w\"") != std::string::npos);
  CHECK(j.find("elapsed_ms") == std::string::npos);
  CHECK(report_json(r, true).find("elapsed_ms") != std::string::npos);
  CHECK(report_text(r, false).find("FAIL  two") != std::string::npos);
}
