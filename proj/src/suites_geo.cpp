#include <future>

#include "suite_impl.hpp"
#include "tpow/gset_geometry.hpp"

namespace tpow::suites {

namespace {

GroupPtr named_group(const std::string& name) {
  if (name == "C3") return FiniteGroup::cyclic(3);
  if (name == "C4") return FiniteGroup::cyclic(4);
  if (name == "S3") return FiniteGroup::symmetric(3);
  throw ConfigError("unknown group " + name);
}

std::string subgroup_label(const GroupPtr& sub) { return sub->name() + " (order " + std::to_string(sub->order()) + ")"; }

// Every check of one group, in a fixed order.
std::vector<Check> gbundle_group(const std::string& gname, const std::vector<long>& ls) {
  Report r;
  auto G = named_group(gname);
  auto subs = subgroups(G);
  std::vector<GroupPtr> modes = {nullptr};
  modes.insert(modes.end(), subs.begin(), subs.end());
  for (long l : ls) {
    if (G->order() % l == 0) continue;
    for (const auto& mode : modes) {
      std::string where = gname + (mode ? " on cosets of " + subgroup_label(mode) : " principal") + ", l=" + std::to_string(l);
      auto d = decompose_power_gset(G, l, mode);
      std::string cert = "X^l has " + std::to_string(d.power_size()) + " points = " + std::to_string(d.diagonal_size()) +
                         " diagonal + " + std::to_string(d.model_size()) + " free";
      try {
        verify_power_decomposition(d);
        r.add("C_l x G decomposition of X^l verified point by point, " + where, true, cert);
      } catch (const InvariantViolation& e) {
        r.add("C_l x G decomposition of X^l verified point by point, " + where, false, cert, "", e.what());
      }
      for (int fiber = 0; fiber <= 1; ++fiber) {
        for (const auto& H : subs) {
          auto res = gbundle_congruence_check(G, mode, fiber, l, H);
          r.add("tau^l(f_* E) - f_*(tau^l E) in (reg(C_l) (x) 1), " + where + ", fiber " +
                    (fiber ? "nontrivial" : "trivial") + ", H = " + subgroup_label(H),
                res.pass, res.left.str(), res.right.str(),
                res.detail + (res.enumerated ? "; X^l enumeration agrees" : "") + "; w = " + res.witness.str());
        }
      }
    }
    for (const auto& sub : subs) {
      auto table = character_table(sub);
      bool ok = true;
      for (const auto& phi : table->irreducibles) ok = ok && induction_adams_check(G, sub, phi, l);
      r.add("psi^" + std::to_string(l) + " Ind = Ind psi^" + std::to_string(l) + " from " + subgroup_label(sub) + " to " +
                gname,
            ok, std::to_string(table->size()) + " irreducibles");
    }
  }
  return r.checks;
}

}  // namespace

void gbundle_rr(Params& p, Report& r) {
  auto ls = p.resolve("l", {2, 3, 5});
  for (long l : ls)
    if (!is_prime(l)) throw ConfigError("l must be prime");
  auto groups = p.resolve_choices("group", {"C3", "C4", "S3"});
  std::vector<std::future<std::vector<Check>>> jobs;
  for (const auto& g : groups) jobs.push_back(std::async(std::launch::async, gbundle_group, g, ls));
  bool any = false;
  for (auto& j : jobs) {
    auto checks = j.get();
    any = any || !checks.empty();
    r.checks.insert(r.checks.end(), checks.begin(), checks.end());
  }
  if (!any) throw ConfigError("no prime l in the grid is prime to the group order");
  if (std::find(groups.begin(), groups.end(), "S3") != groups.end()) {
    auto S3 = FiniteGroup::symmetric(3);
    GroupPtr A3;
    for (const auto& s : subgroups(S3))
      if (s->order() == 3) A3 = s;
    ClassFunction sec = sections_pushforward(trivial_line_bundle(coset_gset(S3, A3)), S3);
    ClassFunction want = trivial_character(S3) + sign_character(S3);
    r.add("sections of the trivial line on S3/C3 are triv + sgn", sec == want, sec.str(), want.str());
  }
}

void k1_tensor(Params& p, Report& r) {
  for (long l : p.resolve("l", {2, 3, 5, 7})) {
    if (!is_prime(l)) throw ConfigError("l must be prime");
    for (long e : {1L, 2L, -1L}) {
      K1Element expected{l, std::vector<Int>(l, Int(-e))};
      expected.exponents[0] = Int(e * (l - 1));
      K1Element got = k1_tensor_power(l, e);
      r.add("tau^" + std::to_string(l) + " of beta^" + std::to_string(e) + " restricted to C_" + std::to_string(l),
            got.exponents == expected.exponents, got.str(), expected.str());
    }
  }
}

void binomial_identity(Params& p, Report& r) {
  for (long l : p.resolve("l", {2, 3, 5, 7, 11, 13})) {
    if (!is_prime(l)) throw ConfigError("l must be prime, got " + std::to_string(l));
    Rat s = binomial_identity_sum(l);
    r.add("sum_{i=1}^{l-1} (-1)^{l-i} binomial(l,i) i / l = -1 for l=" + std::to_string(l),
          s == -1 && binomial_identity_check(l), to_string(s), "-1");
  }
}

}  // namespace tpow::suites
