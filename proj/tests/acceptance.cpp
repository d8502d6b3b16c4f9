#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tpow/exact.hpp"
#include "tpow/suites.hpp"

using namespace tpow;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<SuiteConfig> suites;
  std::int64_t budget_ms;  // 0 = none
  std::function<std::string(const std::vector<Report>&)> extra;  // empty string = ok
};

SuiteConfig cfg(const std::string& s, std::map<std::string, std::string> params = {}) {
  SuiteConfig c;
  c.suite = s;
  c.params = std::move(params);
  return c;
}

std::string first_failure(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    for (const auto& c : r.checks)
      if (!c.pass) return r.suite + ": " + c.name;
  return {};
}

bool has_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0 && c.pass) return true;
  return false;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "character tables of S_l, l <= 6, orthogonal and equal to Young's rule for l <= 5", {cfg("character-tables")},
       10000, nullptr},
      {2, "equivariant binomial theorem: route agreement on >= 200 seeded classes, tau^2(0), negation",
       {cfg("equivariant-binomial")}, 30000,
       [](const std::vector<Report>& rs) -> std::string {
         const auto& r = rs[0];
         for (const auto& c : r.checks)
           if (c.name == "seeded virtual classes checked" && std::stol(c.left) < 200) return "only " + c.left + " classes";
         if (!has_check(r, "tau^2(0) = 0")) return "tau^2(0) instance missing";
         if (!has_check(r, "tau^l(-F) = (-1)^l sgn")) return "negation instance missing";
         return {};
       }},
      {3, "tau^l(lambda_{-1} F) = lambda_{-1}(F O[I_l]) = lambda_{-1}(F H) lambda_{-1}(F), rank <= 3, l <= 4",
       {cfg("lambda-bott")}, 0, nullptr},
      {4, "tau^l(x) - psi^l(x) in ([O[I_l]]) over C_l with a witness, l in {2,3,5}, n <= 2",
       {cfg("adams-congruence")}, 0,
       [](const std::vector<Report>& rs) -> std::string {
         for (const auto& c : rs[0].checks)
           if (!c.witness) return "no witness for " + c.name;
         return {};
       }},
      {5, "K_1 tensor power (l-1, -1, ..., -1) for l in {2,3,5,7}; binomial sum -1 for primes l <= 13",
       {cfg("k1-tensor"), cfg("binomial-identity")}, 0, nullptr},
      {6, "Kunneth push-forward of tau^l(O(m)), n <= 2, 0 <= m <= 3, l <= 4, with the trace oracle",
       {cfg("kunneth")}, 0, nullptr},
      {7, "zero-section Riemann-Roch for y in -2..2, n <= 3, l <= 4, worked instance (0, 2u)",
       {cfg("closed-immersion-rr")}, 0, nullptr},
      {8, "Adams-Riemann-Roch on P^n in Z[1/l], n <= 3, |m| <= 3, l in {2,3}, and the tau form",
       {cfg("arr")}, 0, nullptr},
      {9, "free exterior powers of O[I_l] for l <= 7, quotients Z/p and Z[zeta_l]", {cfg("ideal-structure")}, 0,
       nullptr},
      {10, "G-set congruence for C3, C4, S3 in all modes and all H, certificates and enumeration agree",
       {cfg("gbundle-rr")}, 60000, nullptr},
      {11, "Koszul homology to degree 5, conormal characters, section and alpha certificates", {cfg("koszul")}, 0,
       nullptr},
      {12, "Cartier identity for n <= 3, p in {2,3,5}; theta^2(Omega)^{-1} = (3 - Omega)/4", {cfg("charp")}, 0,
       nullptr},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    std::vector<Report> reports;
    auto t0 = std::chrono::steady_clock::now();
    try {
      for (const auto& s : c.suites) reports.push_back(run_suite(s));
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    size_t checks = 0;
    for (const auto& r : reports) checks += r.checks.size();
    if (why.empty()) why = first_failure(reports);
    if (why.empty() && c.extra) why = c.extra(reports);
    if (why.empty() && c.budget_ms && ms >= c.budget_ms) why = "over budget";
    bool pass = why.empty();
    failed += !pass;
    std::printf("%s  criterion %2d  %6lld ms", pass ? "PASS" : "FAIL", c.id, static_cast<long long>(ms));
    if (c.budget_ms) std::printf(" (< %lld ms)", static_cast<long long>(c.budget_ms));
    std::printf("  %zu checks  %s", checks, c.title.c_str());
    if (!pass) std::printf("  [%s]", why.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
