#include "doctest.h"
#include "tpow/koszul.hpp"
#include "tpow/linalg.hpp"
#include "tpow/tau.hpp"

using namespace tpow;

namespace {

// SplitMix64; independent of the library's corpus generator.
struct Gen {
  std::uint64_t s;
  explicit Gen(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  HPoly hpoly(int terms, long e, long c) {
    HPoly p;
    for (int t = range(1, terms); t > 0; --t) {
      long m = range(-e, e);
      p[m] += range(-c, c);
      if (p[m] == 0) p.erase(m);
    }
    return p;
  }
};

}  // namespace

TEST_CASE("property: every tau route gives the same class") {
  Gen g(20240101);
  for (int i = 0; i < 60; ++i) {
    HPoly x = g.hpoly(3, 3, 3);
    long l = g.range(1, 4);
    int n = static_cast<int>(g.range(0, 2));
    EqKClass ref = tau_internal(x, l, n, TauRoute::Binomial);
    for (TauRoute r : all_routes()) CHECK_MESSAGE(tau_internal(x, l, n, r) == ref, hpoly_str(x) << " l=" << l);
  }
}

TEST_CASE("property: tau is multiplicative and its rank is tau of the rank") {
  Gen g(7);
  for (int i = 0; i < 30; ++i) {
    HPoly x = g.hpoly(2, 2, 2), y = g.hpoly(2, 2, 2);
    long l = g.range(1, 4);
    int n = static_cast<int>(g.range(0, 2));
    CHECK(tau_internal(hpoly_mul(x, y), l, n, TauRoute::Cross) ==
          tau_internal(x, l, n, TauRoute::Cross) * tau_internal(y, l, n, TauRoute::Cross));
    CHECK(tau_internal(x, l, n, TauRoute::Binomial).rank() ==
          tau_internal(hpoly_constant(hpoly_rank(x)), l, 0, TauRoute::Binomial).rank());
  }
}

TEST_CASE("property: Adams congruence modulo the regular ideal") {
  Gen g(99);
  for (int i = 0; i < 24; ++i) {
    HPoly x = g.hpoly(3, 2, 3);
    long l = g.range(0, 1) ? 2 : 3;
    int n = static_cast<int>(g.range(0, 2));
    auto C = cyclic_in_symmetric(l);
    EqKClass diff = restrict_eqk(tau_internal(x, l, n, TauRoute::Binomial), C) -
                    EqKClass::from_base(C, KClassPn::from_hpoly(n, x).psi(l));
    EqKClass reg = EqKClass::from_character(regular_character(C), n);
    auto m = eq_ideal_membership(diff, {reg});
    REQUIRE(m.member);
    CHECK(reg * m.multipliers[0] == diff);
  }
}

TEST_CASE("property: Adams operations on K_0(P^n)") {
  Gen g(3);
  for (int i = 0; i < 40; ++i) {
    int n = static_cast<int>(g.range(0, 4));
    KClassPn x = KClassPn::from_hpoly(n, g.hpoly(3, 3, 4)), y = KClassPn::from_hpoly(n, g.hpoly(3, 3, 4));
    long j = g.range(1, 4), k = g.range(1, 4);
    CHECK(x.psi(j).psi(k) == x.psi(j * k));
    CHECK((x * y).psi(k) == x.psi(k) * y.psi(k));
    if (x.rank() != 0) CHECK(x * x.inverse() == KClassPn::constant(n, 1));
  }
}

TEST_CASE("property: decomposition into irreducibles round-trips") {
  Gen g(5);
  auto S4 = FiniteGroup::symmetric(4);
  auto t = character_table(S4);
  for (int i = 0; i < 30; ++i) {
    std::vector<Int> mult(t->size());
    Int norm = 0;
    for (auto& m : mult) {
      m = g.range(-4, 4);
      norm += m * m;
    }
    ClassFunction x = t->combine(mult);
    CHECK(t->decompose(x) == mult);
    CHECK(inner_product(x, x) == Cyclotomic(norm));
  }
}

TEST_CASE("property: Smith normal form certificates") {
  Gen g(11);
  for (int i = 0; i < 30; ++i) {
    size_t r = g.range(1, 4), c = g.range(1, 4);
    MatZ A(r, std::vector<Int>(c));
    for (auto& row : A)
      for (auto& v : row) v = g.range(-6, 6);
    auto s = smith_normal_form(A);
    MatZ UA(r, std::vector<Int>(c, 0)), UAV(r, std::vector<Int>(c, 0));
    for (size_t a = 0; a < r; ++a)
      for (size_t k = 0; k < r; ++k)
        for (size_t b = 0; b < c; ++b) UA[a][b] += s.U[a][k] * A[k][b];
    for (size_t a = 0; a < r; ++a)
      for (size_t k = 0; k < c; ++k)
        for (size_t b = 0; b < c; ++b) UAV[a][b] += UA[a][k] * s.V[k][b];
    CHECK(UAV == s.D);
    auto d = s.diagonal();
    for (size_t k = 1; k < d.size(); ++k)
      if (d[k - 1] != 0) CHECK(d[k] % d[k - 1] == 0);
    CHECK(s.rank == rank_rational(to_rational(A)));
  }
}

TEST_CASE("property: Koszul homology of random linear forms") {
  Gen g(13);
  for (int i = 0; i < 12; ++i) {
    int nv = static_cast<int>(g.range(1, 3));
    int m = static_cast<int>(g.range(1, 3));
    long p = g.range(0, 1) ? 0 : 5;
    GradedAlgebra A(nv, {p});
    std::vector<GPoly> gens;
    for (int k = 0; k < m; ++k) {
      GPoly f;
      for (int v = 0; v < nv; ++v) {
        long c = g.range(-2, 2);
        if (c) f = gpoly_add(f, gpoly_variable(nv, v), Rat(c));
      }
      if (f.empty()) f = gpoly_variable(nv, 0);
      gens.push_back(f);
    }
    auto h = koszul_homology_dimensions(A, gens, 4);
    CHECK(h.dd_zero);
    CHECK(h.dims == koszul_linear_oracle(A, gens, 4).dims);
  }
}
