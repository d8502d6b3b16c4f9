#include <optional>

#include "suite_impl.hpp"
#include "tpow/lambda.hpp"
#include "tpow/tau.hpp"

namespace tpow::suites {

namespace {

std::string cell(long l, long n) { return "l=" + std::to_string(l) + ", n=" + std::to_string(n); }

size_t class_with_type(const GroupPtr& G, const Partition& type) {
  for (size_t c = 0; c < G->num_classes(); ++c)
    if (G->classes()[c].cycle_type == type) return c;
  throw DomainError("no class of type " + partition_str(type));
}

HPoly hpoly_lambda_minus_one(const HPoly& F) {
  HPoly r = hpoly_constant(1);
  for (const auto& [m, c] : F)
    for (Int k = 0; k < c; ++k) r = hpoly_mul(r, hpoly_add(hpoly_constant(1), HPoly{{m, -1}}));
  return r;
}

HPoly hpoly_scale(const HPoly& x, long c) { return hpoly_mul(x, hpoly_constant(c)); }

// Aggregates one pass/fail line over a family of instances.
struct Tally {
  long total = 0, ok = 0;
  std::optional<std::string> first_failure;
  std::string left, right;
  void record(bool pass, const std::string& what, const std::string& l, const std::string& r) {
    ++total;
    if (pass) {
      ++ok;
    } else if (!first_failure) {
      first_failure = what;
      left = l;
      right = r;
    }
  }
  void emit(Report& rep, const std::string& name) const {
    if (first_failure)
      rep.add(name, false, left, right, "first failure at " + *first_failure);
    else
      rep.add(name, true, std::to_string(ok) + "/" + std::to_string(total) + " instances agree",
              std::to_string(total) + "/" + std::to_string(total));
  }
};

// Polynomial in u = h - 1 with coefficients in Q(zeta), truncated after u^n.
struct UPoly {
  int n = 0;
  std::vector<Cyclotomic> c;

  UPoly(int n_, Cyclotomic constant) : n(n_), c(n_ + 1, Cyclotomic(0)) { c[0] = std::move(constant); }

  static UPoly of(const KClassPn& x) {
    UPoly r(x.n(), Cyclotomic(0));
    for (int j = 0; j <= x.n(); ++j) r.c[j] = Cyclotomic(x.coeffs()[j]);
    return r;
  }

  UPoly operator*(const UPoly& o) const {
    UPoly r(n, Cyclotomic(0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  UPoly scaled(const Cyclotomic& s) const {
    UPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  UPoly operator-(const UPoly& o) const {
    UPoly r = *this;
    for (int i = 0; i <= n; ++i) r.c[i] -= o.c[i];
    return r;
  }
  // constant term a must be nonzero; 1/(a + N) = a^{-1} sum (-N/a)^k
  UPoly inverse() const {
    Cyclotomic ainv = c[0].inverse();
    UPoly nil = *this;
    nil.c[0] = Cyclotomic(0);
    nil = nil.scaled(-ainv);
    UPoly r(n, Cyclotomic(1)), p(n, Cyclotomic(1));
    for (int k = 1; k <= n; ++k) {
      p = p * nil;
      for (int i = 0; i <= n; ++i) r.c[i] += p.c[i];
    }
    return r.scaled(ainv);
  }
  UPoly pow(long e) const {
    UPoly base = e >= 0 ? *this : inverse();
    UPoly r(n, Cyclotomic(1));
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) r = r * base;
    return r;
  }
  Cyclotomic pushforward() const {
    Cyclotomic s(0);
    for (int j = 0; j <= n; ++j) s += c[j] * Cyclotomic(KClassPn::u_power(n, j).pushforward());
    return s;
  }
};

}  // namespace

void equivariant_binomial(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 204);
  long cells = static_cast<long>(ls.size() * ns.size());
  long per_cell = (corpus + cells - 1) / cells;
  Corpus rng(p.seed());
  long classes = 0;
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      Tally routes, symbols, compositions, additivity;
      for (long s = 0; s < per_cell; ++s) {
        HPoly x = rng.hpoly(3, 2, 2);
        ++classes;
        std::string xs = hpoly_str(x);
        EqKClass base = tau_internal(x, l, ni, TauRoute::Compositions);
        for (TauRoute route : all_routes()) {
          if (route == TauRoute::Compositions) continue;
          EqKClass t = tau_internal(x, l, ni, route);
          routes.record(t == base, xs + " via " + route_name(route), t.str(), base.str());
        }
        EqKClass sb = evaluate_symbols(tau_external(x, l), l, ni);
        symbols.record(sb == base, xs, sb.str(), base.str());
        EqKClass sc = evaluate_symbols(tau_external_compositions(x, l), l, ni);
        compositions.record(sc == base, xs, sc.str(), base.str());
        // tau^l(x + y) = sum_i Ind(tau^i(x) (x) tau^{l-i}(y))
        HPoly y = rng.hpoly(2, 2, 2);
        EqKClass sum = tau_internal(hpoly_add(x, y), l, ni, TauRoute::Binomial);
        EqKClass parts = tau_internal(y, l, ni, TauRoute::Binomial) + base;
        for (long i = 1; i < l; ++i)
          parts += cross_product(tau_internal(x, i, ni, TauRoute::Binomial), tau_internal(y, l - i, ni, TauRoute::Binomial));
        additivity.record(sum == parts, xs + " and " + hpoly_str(y), sum.str(), parts.str());
      }
      routes.emit(r, "composition, binomial, cross and cycle-type routes agree, " + cell(l, n));
      symbols.emit(r, "binomial symbol form evaluates to tau^l, " + cell(l, n));
      compositions.emit(r, "composition symbol form evaluates to tau^l, " + cell(l, n));
      additivity.emit(r, "tau^l(x + y) = sum Ind(tau^i x (x) tau^{l-i} y), " + cell(l, n));
    }
  r.add("seeded virtual classes checked", classes >= 200 || corpus < 200, std::to_string(classes),
        ">= " + std::to_string(std::min<long>(corpus, 200)));
  for (long n : ns) {
    EqKClass z = tau_internal({}, 2, static_cast<int>(n), TauRoute::Binomial);
    r.add("tau^2(0) = 0 on P^" + std::to_string(n), z.is_zero(), z.str(), "0");
  }
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      Tally neg, trace;
      auto S = FiniteGroup::symmetric(static_cast<int>(l));
      EqKClass sgn = EqKClass::from_character(sign_character(S), ni) * Cyclotomic(l % 2 ? -1 : 1);
      for (int s = 0; s < 3; ++s) {
        HPoly F = rng.genuine(3, 2);
        EqKClass lhs = tau_internal(hpoly_neg(F), l, ni, TauRoute::Compositions);
        EqKClass rhs = sgn * tau_internal(F, l, ni, TauRoute::Compositions);
        neg.record(lhs == rhs, hpoly_str(F), lhs.str(), rhs.str());
        if (l <= 3) {
          EqKClass o = tensor_power_trace_oracle(F, l, ni);
          EqKClass t = tau_internal(F, l, ni, TauRoute::Binomial);
          trace.record(o == t, hpoly_str(F), t.str(), o.str());
        }
      }
      neg.emit(r, "tau^l(-F) = (-1)^l sgn tau^l(F), " + cell(l, n));
      if (l <= 3) trace.emit(r, "tau^l of a genuine class equals the permutation trace on its tensor power, " + cell(l, n));
    }
  // worked examples on P^1
  auto S2 = FiniteGroup::symmetric(2);
  EqKClass th = tau_internal(hpoly_parse("h"), 2, 1, TauRoute::Binomial);
  EqKClass h2 = EqKClass::tensor(trivial_character(S2), KClassPn::h_power(1, 2));
  r.add("tau^2(h) = h^2 with trivial action on P^1", th == h2, th.str(), h2.str());
  EqKClass tk = tau_internal(hpoly_parse("1 - h^-1"), 2, 1, TauRoute::Binomial);
  EqKClass expected = EqKClass::tensor(sign_character(S2), KClassPn::h_power(1, -2)) -
                      EqKClass::tensor(regular_character(S2), KClassPn::h_power(1, -1)) + EqKClass::one(S2, 1);
  r.add("tau^2(1 - h^-1) = h^-2 sgn - h^-1 reg + 1 on P^1", tk == expected, tk.str(), expected.str());
  KClassPn at_e = tk.value_at(S2->class_of(S2->identity()));
  KClassPn at_t = tk.value_at(class_with_type(S2, {2}));
  bool values = at_e.is_zero() && at_t == KClassPn(1, {Rat(0), Rat(2)});
  r.add("tau^2(1 - h^-1) has values (0, 2u) at (identity, transposition)", values,
        "(" + at_e.str() + ", " + at_t.str() + ")", "(0, 2*u)");
}

void tau_mult(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 6);
  Corpus rng(p.seed());
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      for (TauRoute route : {TauRoute::Compositions, TauRoute::Cross}) {
        Tally t;
        for (long s = 0; s < corpus; ++s) {
          HPoly x = rng.hpoly(2, 2, 2), y = rng.hpoly(2, 2, 2);
          EqKClass lhs = tau_internal(hpoly_mul(x, y), l, ni, route);
          EqKClass rhs = tau_internal(x, l, ni, route) * tau_internal(y, l, ni, route);
          t.record(lhs == rhs, "(" + hpoly_str(x) + ")(" + hpoly_str(y) + ")", lhs.str(), rhs.str());
        }
        t.emit(r, "tau^l(xy) = tau^l(x) tau^l(y) via " + route_name(route) + ", " + cell(l, n));
      }
    }
}

void tau_negation(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 4);
  Corpus rng(p.seed());
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      auto S = FiniteGroup::symmetric(static_cast<int>(l));
      EqKClass twist = EqKClass::from_character(sign_character(S), ni) * Cyclotomic(l % 2 ? -1 : 1);
      std::vector<HPoly> classes;
      for (long m = -2; m <= 2; ++m) classes.push_back({{m, 1}});
      for (long s = 0; s < corpus; ++s) classes.push_back(rng.genuine(3, 2));
      for (TauRoute route : all_routes()) {
        Tally t;
        for (const auto& F : classes) {
          EqKClass lhs = tau_internal(hpoly_neg(F), l, ni, route);
          EqKClass rhs = twist * tau_internal(F, l, ni, route);
          t.record(lhs == rhs, hpoly_str(F), lhs.str(), rhs.str());
        }
        t.emit(r, "tau^l(-F) = (-1)^l sgn tau^l(F) for lines and genuine F via " + route_name(route) + ", " + cell(l, n));
      }
    }
}

void tau_restriction(Params& p, Report& r) {
  auto ls = p.resolve("l", {2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 4);
  Corpus rng(p.seed());
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      for (long i = 1; i < l; ++i) {
        auto Y = FiniteGroup::young({static_cast<int>(i), static_cast<int>(l - i)});
        Tally t;
        for (long s = 0; s < corpus; ++s) {
          HPoly x = rng.hpoly(3, 2, 2);
          EqKClass lhs = restrict_eqk(tau_internal(x, l, ni, TauRoute::Binomial), Y);
          EqKClass rhs = outer_product(
              {tau_internal(x, i, ni, TauRoute::Binomial), tau_internal(x, l - i, ni, TauRoute::Binomial)}, Y);
          t.record(lhs == rhs, hpoly_str(x), lhs.str(), rhs.str());
        }
        t.emit(r, "Res to S_" + std::to_string(i) + " x S_" + std::to_string(l - i) +
                      " of tau^l(x) = tau^i(x) (x) tau^{l-i}(x), " + cell(l, n));
      }
    }
  auto C2 = cyclic_in_symmetric(2);
  EqKClass res = restrict_eqk(tau_internal(hpoly_parse("h"), 2, 1, TauRoute::Binomial), C2);
  EqKClass expected = EqKClass::tensor(trivial_character(C2), KClassPn::h_power(1, 2));
  r.add("Res to C_2 of tau^2(h) = h^2 with trivial action on P^1", res == expected, res.str(), expected.str());
}

void lambda_bott(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 4);
  Corpus rng(p.seed());
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      auto S = FiniteGroup::symmetric(static_cast<int>(l));
      ClassFunction perm = permutation_module_character(l);
      ClassFunction H = reduced_permutation_character(l);
      auto lam = exterior_powers(perm, l);
      std::vector<EqKClass> gens;
      for (long i = 1; i < l; ++i) gens.push_back(EqKClass::from_character(lam[i], ni));
      Tally cor, oracle, bott, theta_sym, inv;
      for (long s = 0; s < corpus; ++s) {
        HPoly F = rng.genuine(3, 2);
        std::string fs = hpoly_str(F);
        LineSumClass lf = LineSumClass::from_hpoly(S, ni, F);
        EqKClass tau = tau_internal(hpoly_lambda_minus_one(F), l, ni, TauRoute::Binomial);
        EqKClass twisted = lambda_minus_one_twisted(lf, perm);
        EqKClass split = lambda_minus_one_twisted(lf, H) * lambda_minus_one(lf);
        cor.record(tau == twisted && twisted == split, fs, tau.str(), twisted.str() + " ; " + split.str());
        EqKClass fo = EqKClass::tensor(perm, KClassPn::from_hpoly(ni, F));
        EqKClass o = eqk_lambda_minus_one(fo);
        oracle.record(o == twisted, fs, twisted.str(), o.str());
        if (hpoly_rank(F) <= 2) {
          EqKClass diff = bott_theta(lf, l) - lambda_minus_one_twisted(lf, H);
          auto m = eq_ideal_membership(diff, gens);
          bott.record(m.member, fs, diff.str(), "member of (Lambda^i O[I_l], i = 1..l-1)");
        }
        EqKClass ts = bott_theta_symmetric(EqKClass::from_base(S, KClassPn::from_hpoly(ni, F)), l);
        EqKClass tb = bott_theta(lf, l);
        theta_sym.record(ts == tb, fs, tb.str(), ts.str());
        if (is_prime(l)) {
          EqKClass prod = bott_theta_inverse(lf, l) * tb;
          inv.record(prod == EqKClass::one(S, ni), fs, prod.str(), "1");
        }
      }
      cor.emit(r, "tau^l(lambda_{-1} F) = lambda_{-1}(F O[I_l]) = lambda_{-1}(F H) lambda_{-1}(F), " + cell(l, n));
      oracle.emit(r, "lambda_{-1}(F O[I_l]) agrees with Newton's-identity exterior powers, " + cell(l, n));
      if (l >= 2) bott.emit(r, "theta^l(F) - lambda_{-1}(F H) lies in (Lambda^i O[I_l], i = 1..l-1), " + cell(l, n));
      theta_sym.emit(r, "theta^l by line factors equals theta^l by symmetric reduction, " + cell(l, n));
      if (is_prime(l)) inv.emit(r, "theta^l(F)^{-1} theta^l(F) = 1 in the localization at l, " + cell(l, n));
      if (l >= 2 && n == ns.front()) {
        std::vector<EqKClass> full = gens;
        full.push_back(EqKClass::from_character(lam[l], ni));
        bool unit = eq_ideal_membership(EqKClass::one(S, ni), full).member;
        r.add("with i = 1..l the ideal contains Lambda^l O[I_l] = sgn and is the unit ideal, l=" + std::to_string(l), unit,
              lam[l].str(), sign_character(S).str());
      }
    }
}

void adams_congruence(Params& p, Report& r) {
  auto ls = p.resolve("l", {2, 3, 5});
  auto ns = p.resolve("n", {0, 1, 2});
  long corpus = p.resolve_one("corpus", 8);
  for (long l : ls)
    if (!is_prime(l)) throw ConfigError("l must be prime");
  Corpus rng(p.seed());
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      auto C = cyclic_in_symmetric(l);
      std::vector<EqKClass> gens = {EqKClass::from_character(regular_character(C), ni)};
      for (long s = 0; s < corpus; ++s) {
        HPoly x = rng.hpoly(3, 2, 3);
        EqKClass res = restrict_eqk(tau_internal(x, l, ni, TauRoute::Binomial), C);
        EqKClass psi = EqKClass::from_base(C, KClassPn::from_hpoly(ni, x).psi(l));
        EqKClass diff = res - psi;
        auto m = eq_ideal_membership(diff, gens);
        bool verified = m.member && gens[0] * m.multipliers[0] == diff;
        r.add("tau^" + std::to_string(l) + "(" + hpoly_str(x) + ") - psi^" + std::to_string(l) + " in ([O[I_l]]) on P^" +
                  std::to_string(n),
              verified, diff.str(), "[O[C_" + std::to_string(l) + "]] * w",
              m.member ? std::optional<std::string>("w = " + m.multipliers[0].str()) : std::nullopt);
      }
    }
}

void kunneth(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2});
  auto ms = p.resolve("m", {0, 1, 2, 3});
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      for (long m : ms) {
        HPoly hm{{m, 1}};
        Int d = binomial(n + m, static_cast<unsigned long>(n));
        EqKClass rhs = tau_internal(hpoly_constant(d), l, 0, TauRoute::Binomial);
        EqKClass lhs = kunneth_pushforward(tau_external(hm, l), l, ni);
        EqKClass comp = kunneth_pushforward(tau_external_compositions(hm, l), l, ni);
        r.add("f^l_* tau^l(O(" + std::to_string(m) + ")) = tau^l(f_* O(" + std::to_string(m) + ")), " + cell(l, n),
              lhs == rhs && comp == rhs, lhs.str(), rhs.str(), "f_* O(m) = " + d.get_str());
      }
      if (ms.size() > 1) {
        long a = ms.back(), b = ms.front();
        HPoly v{{a, 1}, {b, -1}};
        Int d = binomial(n + a, static_cast<unsigned long>(n)) - binomial(n + b, static_cast<unsigned long>(n));
        EqKClass lhs = kunneth_pushforward(tau_external(v, l), l, ni);
        EqKClass rhs = tau_internal(hpoly_constant(d), l, 0, TauRoute::Binomial);
        r.add("Kunneth push-forward of tau^l(h^" + std::to_string(a) + " - h^" + std::to_string(b) + "), " + cell(l, n),
              lhs == rhs, lhs.str(), rhs.str());
      }
    }
  for (long d = 0; d <= 4; ++d)
    for (long l = 1; l <= 3; ++l) {
      EqKClass o = tensor_power_trace_oracle(hpoly_constant(d), l, 0);
      EqKClass t = tau_internal(hpoly_constant(d), l, 0, TauRoute::Binomial);
      r.add("tau^" + std::to_string(l) + " of a " + std::to_string(d) + "-dimensional space equals its permutation trace",
            o == t, t.str(), o.str());
    }
  auto trace_values = [](long d, long l) {
    auto S = FiniteGroup::symmetric(static_cast<int>(l));
    EqKClass t = tau_internal(hpoly_constant(d), l, 0, TauRoute::Binomial);
    std::string s = "(";
    for (size_t c = 0; c < S->num_classes(); ++c) {
      // identity first, then by increasing number of moved points
      size_t cls = class_with_type(S, partitions(static_cast<int>(l))[partitions(static_cast<int>(l)).size() - 1 - c]);
      s += (c ? ", " : "") + to_string(t.value_at(cls).rank());
    }
    return s + ")";
  };
  std::string v42 = trace_values(4, 2), v23 = trace_values(2, 3);
  r.add("trace of S_2 on (k^4)^{(x)2} by cycle type", v42 == "(16, 4)", v42, "(16, 4)");
  r.add("trace of S_3 on (k^2)^{(x)3} by cycle type", v23 == "(8, 4, 2)", v23, "(8, 4, 2)");
}

void closed_immersion_rr(Params& p, Report& r) {
  auto ls = p.resolve("l", {1, 2, 3, 4});
  auto ns = p.resolve("n", {0, 1, 2, 3});
  auto ys = p.resolve("y", {-2, -1, 0, 1, 2});
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      auto S = FiniteGroup::symmetric(static_cast<int>(l));
      EqKClass lam = eqk_lambda_minus_one(EqKClass::from_character(reduced_permutation_character(l), 0)).pow(n);
      HPoly koszul = hpoly_constant(1);
      for (long k = 0; k < n; ++k) koszul = hpoly_mul(koszul, hpoly_parse("1 - h^-1"));
      for (long y : ys) {
        EqKClass lhs = tau_internal(hpoly_scale(koszul, y), l, ni, TauRoute::Binomial);
        EqKClass rhs = zero_section_pushforward(lam * tau_internal(hpoly_constant(y), l, 0, TauRoute::Binomial), ni);
        r.add("tau^l(i_* " + std::to_string(y) + ") = i_*(lambda_{-1}(n H) tau^l(" + std::to_string(y) + ")), " + cell(l, n),
              lhs == rhs, lhs.str(), rhs.str());
      }
    }
  auto S2 = FiniteGroup::symmetric(2);
  EqKClass lhs = tau_internal(hpoly_parse("1 - h^-1"), 2, 1, TauRoute::Binomial);
  EqKClass rhs = zero_section_pushforward(
      eqk_lambda_minus_one(EqKClass::from_character(reduced_permutation_character(2), 0)) *
          tau_internal(hpoly_constant(1), 2, 0, TauRoute::Binomial),
      1);
  auto vals = [&](const EqKClass& x) {
    return "(" + x.value_at(S2->class_of(S2->identity())).str() + ", " + x.value_at(class_with_type(S2, {2})).str() + ")";
  };
  std::string want = "(" + KClassPn(1).str() + ", " + KClassPn(1, {Rat(0), Rat(2)}).str() + ")";
  r.add("worked instance l=2, n=1, y=1 has values (0, 2u) on both sides", vals(lhs) == want && vals(rhs) == want,
        vals(lhs), vals(rhs));
}

void arr(Params& p, Report& r) {
  auto ls = p.resolve("l", {2, 3});
  auto ns = p.resolve("n", {0, 1, 2, 3});
  auto ms = p.resolve("m", {-3, -2, -1, 0, 1, 2, 3});
  for (long l : ls)
    if (!is_prime(l)) throw ConfigError("l must be prime");
  auto triv = FiniteGroup::cyclic(1);
  for (long l : ls)
    for (long n : ns) {
      int ni = static_cast<int>(n);
      LineSumClass omega(triv, ni);
      omega.add(trivial_character(triv), -1, n + 1);
      omega.add(trivial_character(triv), 0, -1);
      KClassPn inv = bott_theta_inverse(omega, l).value_at(0);
      bool local = true;
      for (const auto& c : inv.coeffs()) local = local && localized_at_l_check(c, l);
      r.add("theta^" + std::to_string(l) + "(Omega_P^" + std::to_string(n) + ")^{-1} has coefficients in Z[1/l]", local,
            inv.str(), "Z[1/" + std::to_string(l) + "]");
      // evaluation at the generator of C_l: lambda_{-1}(Omega H)^{-1} = l prod_k (1 - zeta^k h^-1)^{-(n+1)}
      UPoly hinv = UPoly::of(KClassPn::h_power(ni, -1));
      UPoly multiplier(ni, Cyclotomic(l));
      for (long k = 1; k < l; ++k) {
        UPoly factor = UPoly(ni, Cyclotomic(1)) - hinv.scaled(Cyclotomic::zeta_power(l, k));
        multiplier = multiplier * factor.pow(-(n + 1));
      }
      for (long m : ms) {
        Int d = m >= -n ? binomial(n + m, static_cast<unsigned long>(n)) : Int(0);
        Rat exact = (inv * KClassPn::h_power(ni, l * m)).pushforward();
        Rat direct = KClassPn::h_power(ni, m).pushforward();
        r.add("psi^l f_*(h^" + std::to_string(m) + ") = f_*(theta^l(Omega)^{-1} psi^l h^" + std::to_string(m) + "), " +
                  cell(l, n),
              exact == Rat(direct) && localized_at_l_check(exact, l), to_string(direct), to_string(exact));
        Cyclotomic at_c = (multiplier * UPoly::of(KClassPn::h_power(ni, l * m))).pushforward();
        Cyclotomic tau_left = Cyclotomic(direct);
        r.add("tau form modulo ([O[C_l]]): tau^l f_*(h^" + std::to_string(m) + ") at the generator, " + cell(l, n),
              at_c == tau_left, tau_left.str(), at_c.str(), "f_* O(m) = " + to_string(d));
      }
    }
}

}  // namespace tpow::suites
