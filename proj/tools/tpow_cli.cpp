#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpow/exact.hpp"
#include "tpow/suites.hpp"
#include "tpow/tau.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kConfig = 2, kInvariant = 3 };

std::vector<tpow::SuiteConfig> build_configs(const std::string& suite, const std::vector<std::string>& params,
                                             std::uint64_t seed, std::optional<long> bound) {
  tpow::SuiteConfig base;
  base.seed = seed;
  base.bound = bound;
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw tpow::ConfigError("--param expects key=value, got '" + kv + "'");
    base.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::vector<tpow::SuiteConfig> cfgs;
  if (suite != "all") {
    base.suite = suite;
    cfgs.push_back(base);
    return cfgs;
  }
  if (!params.empty() || bound) throw tpow::ConfigError("--param and --bound need a single suite");
  for (const auto& s : tpow::suite_registry()) {
    base.suite = s.name;
    cfgs.push_back(base);
  }
  return cfgs;
}

int verify(const std::string& suite, const std::vector<std::string>& params, std::uint64_t seed,
           std::optional<long> bound, const std::string& format, bool timing, unsigned jobs) {
  auto reports = tpow::run_suites(build_configs(suite, params, seed, bound), jobs);
  if (format == "json") {
    std::cout << tpow::reports_json(reports, timing) << "\n";
  } else {
    for (size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << tpow::report_text(reports[i], timing);
  }
  for (const auto& r : reports)
    if (!r.all_pass()) return kCheckFailed;
  return kPass;
}

int list() {
  for (const auto& s : tpow::suite_registry()) {
    std::cout << s.name << "  " << s.anchor << "\n";
    for (const auto& p : s.schema) {
      std::cout << "    " << p.key << ": ";
      if (p.choices.empty())
        std::cout << "[" << p.min << ", " << p.max << "]";
      else
        for (size_t i = 0; i < p.choices.size(); ++i) std::cout << (i ? "|" : "") << p.choices[i];
      std::cout << "  " << p.doc << "\n";
    }
  }
  return kPass;
}

int compute_tau(long l, int n, const std::string& expr, const std::string& route) {
  if (l < 1 || l > 6) throw tpow::ConfigError("--l must be in [1, 6]");
  if (n < 0 || n > 6) throw tpow::ConfigError("--n must be in [0, 6]");
  tpow::HPoly x = tpow::hpoly_parse(expr);
  std::cout << "x = " << tpow::hpoly_str(x) << " on P^" << n << "\n";
  if (route != "all") {
    auto t = tpow::tau_internal(x, l, n, tpow::parse_route(route));
    std::cout << "tau^" << l << "(x) = " << t.str() << "\n";
    return kPass;
  }
  std::optional<tpow::EqKClass> first;
  bool agree = true;
  for (auto r : tpow::all_routes()) {
    auto t = tpow::tau_internal(x, l, n, r);
    std::cout << tpow::route_name(r) << ": " << t.str() << "\n";
    if (!first)
      first = t;
    else
      agree = agree && t == *first;
  }
  std::cout << (agree ? "routes agree" : "routes DISAGREE") << "\n";
  return agree ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for tensor-power operations in equivariant K-theory"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "run a verification suite (or all) and print its report");
  std::string suite, format = "text";
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  long bound_value = 0;
  bool no_timing = false;
  unsigned jobs = 0;
  v->add_option("--suite", suite, "suite name, or all")->required();
  v->add_option("--param", params, "key=value, repeatable");
  v->add_option("--seed", seed, "corpus seed");
  v->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* bound_opt = v->add_option("--bound", bound_value, "degree bound D");
  v->add_flag("--no-timing", no_timing, "omit elapsed time so that reports are byte-identical");
  v->add_option("--jobs", jobs, "worker threads for suite=all (0 = hardware)");

  app.add_subcommand("list", "list suites with their statements and parameters");

  auto* c = app.add_subcommand("compute", "ad-hoc evaluation");
  auto* ct = c->add_subcommand("tau", "tau^l of an integer combination of powers of h on P^n");
  c->require_subcommand(1);
  long l = 2;
  int n = 1;
  std::string expr, route = "all";
  ct->add_option("--l", l, "tensor power")->required();
  ct->add_option("--class", expr, "expression such as \"h^2 - 3*h^-1 + 2\"")->required();
  ct->add_option("--n", n, "projective dimension");
  ct->add_option("--route", route, "compositions, binomial, cross, cycle_psi or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  try {
    if (app.got_subcommand(v)) {
      std::optional<long> bound;
      if (bound_opt->count()) bound = bound_value;
      return verify(suite, params, seed, bound, format, !no_timing, jobs);
    }
    if (app.got_subcommand("list")) return list();
    return compute_tau(l, n, expr, route);
  } catch (const tpow::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const tpow::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kConfig;
  } catch (const tpow::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  }
}
