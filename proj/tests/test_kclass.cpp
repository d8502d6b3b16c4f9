#include "doctest.h"
#include "tpow/kclass.hpp"

using namespace tpow;

namespace {

// (m+1)(m+2)...(m+n)/n!
Rat hilbert_polynomial(int n, long m) {
  Rat r = 1;
  for (int k = 1; k <= n; ++k) r *= Rat(m + k) / k;
  return r;
}

}  // namespace

TEST_CASE("expression grammar") {
  HPoly p = hpoly_parse("h^2 - 3*h^-1 + 2");
  CHECK(p == HPoly{{2, 1}, {-1, -3}, {0, 2}});
  CHECK(hpoly_parse("2h") == HPoly{{1, 2}});
  CHECK(hpoly_parse("-h^-2") == HPoly{{-2, -1}});
  CHECK(hpoly_parse("0").empty());
  CHECK(hpoly_parse(hpoly_str(p)) == p);
  CHECK_THROWS_AS(hpoly_parse("h^"), DomainError);
  CHECK_THROWS_AS(hpoly_parse("x"), DomainError);
  CHECK(hpoly_positive_part(p) == HPoly{{2, 1}, {0, 2}});
  CHECK(hpoly_negative_part(p) == HPoly{{-1, 3}});
  CHECK(hpoly_rank(p) == 0);
}

TEST_CASE("Euler characteristic of O(m) on P^n") {
  for (int n = 0; n <= 4; ++n)
    for (long m = -6; m <= 6; ++m) CHECK(KClassPn::h_power(n, m).pushforward() == hilbert_polynomial(n, m));
}

TEST_CASE("ring structure of K_0(P^n)") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(KClassPn::u_power(n, n + 1).is_zero());
    for (long a = -3; a <= 3; ++a) {
      CHECK(KClassPn::h_power(n, a) * KClassPn::h_power(n, -a) == KClassPn::constant(n, 1));
      CHECK(KClassPn::h_power(n, a).psi(3) == KClassPn::h_power(n, 3 * a));
      CHECK(KClassPn::h_power(n, a).inverse() == KClassPn::h_power(n, -a));
    }
    KClassPn x = KClassPn::from_hpoly(n, hpoly_parse("2 + h - h^-1"));
    CHECK(x * x.inverse() == KClassPn::constant(n, 1));
    CHECK(x.rank() == 2);
    CHECK(x.pow(3) == x * x * x);
  }
  CHECK(KClassPn::from_hpoly(1, hpoly_parse("1 - h^-1")) == KClassPn(1, {Rat(0), Rat(1)}));
}

TEST_CASE("equivariant classes") {
  auto S3 = FiniteGroup::symmetric(3);
  KClassPn y = KClassPn::from_hpoly(2, hpoly_parse("h - 2"));
  auto sgn = sign_character(S3);
  EqKClass a = EqKClass::tensor(sgn, y);
  CHECK(a * a == EqKClass::from_base(S3, y * y));
  CHECK(a.trivial_projection().is_zero());
  CHECK(EqKClass::from_base(S3, y).trivial_projection() == y);
  CHECK(EqKClass::from_base(S3, KClassPn::h_power(2, 1)).pushforward() == trivial_character(S3) * Cyclotomic(3));
  auto C3 = subgroups(S3)[4];
  REQUIRE(C3->order() == 3);
  const auto& e = cached_embedding(C3, S3);
  CHECK(a.restrict(e) == EqKClass::from_base(C3, y));
  CHECK(EqKClass::one(C3, 2).induce(e) == EqKClass::tensor(trivial_character(S3) + sgn, KClassPn::constant(2, 1)));
}

TEST_CASE("equivariant ideal membership returns a witness") {
  auto C3 = FiniteGroup::cyclic(3);
  EqKClass reg = EqKClass::from_character(regular_character(C3), 1);
  EqKClass x = reg * EqKClass::from_base(C3, KClassPn::from_hpoly(1, hpoly_parse("h^2 + 5")));
  auto m = eq_ideal_membership(x, {reg});
  REQUIRE(m.member);
  CHECK(reg * m.multipliers[0] == x);
  CHECK_FALSE(eq_ideal_membership(EqKClass::one(C3, 1), {reg}).member);
  CHECK(eq_ideal_membership(EqKClass::one(C3, 1), {EqKClass::one(C3, 1) * Cyclotomic(3)}, 3).member);
}
