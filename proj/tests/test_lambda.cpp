#include "doctest.h"
#include "tpow/lambda.hpp"
#include "tpow/tau.hpp"

using namespace tpow;

TEST_CASE("lambda_{-1} and Bott elements of lines") {
  auto G = FiniteGroup::cyclic(1);
  for (int n = 0; n <= 3; ++n)
    for (long m = -2; m <= 2; ++m) {
      auto F = LineSumClass::from_hpoly(G, n, HPoly{{m, 1}});
      CHECK(lambda_minus_one(F).value_at(0) == KClassPn::constant(n, 1) - KClassPn::h_power(n, m));
      for (long l = 1; l <= 4; ++l) {
        HPoly theta;
        for (long k = 0; k < l; ++k) theta[k * m] += 1;
        CHECK(bott_theta(F, l).value_at(0) == KClassPn::from_hpoly(n, theta));
      }
    }
}

TEST_CASE("twisted lambda_{-1} of a line by the permutation module") {
  // lambda_{-1}(h (x) O[I_2]) = (1 - h)(1 - h sgn)
  auto S2 = FiniteGroup::symmetric(2);
  auto F = LineSumClass::from_hpoly(S2, 1, HPoly{{1, 1}});
  EqKClass h = EqKClass::from_base(S2, KClassPn::h_power(1, 1));
  EqKClass one = EqKClass::one(S2, 1);
  EqKClass expect = (one - h) * (one - h * EqKClass::from_character(sign_character(S2), 1));
  CHECK(lambda_minus_one_twisted(F, permutation_module_character(2)) == expect);
}

TEST_CASE("exterior powers through Newton's identity") {
  auto S3 = FiniteGroup::symmetric(3);
  EqKClass x = EqKClass::from_character(permutation_character(S3), 0);
  auto lam = eqk_exterior_powers(x, 3);
  auto ref = exterior_powers(permutation_character(S3), 3);
  for (int i = 0; i <= 3; ++i) CHECK(lam[i] == EqKClass::from_character(ref[i], 0));
  CHECK(eqk_lambda_minus_one(x).is_zero());
}

TEST_CASE("Bott inverse in the localization") {
  auto G = FiniteGroup::cyclic(1);
  auto F = LineSumClass::from_hpoly(G, 2, hpoly_parse("h + h^-1"));
  for (long l : {2L, 3L, 5L}) CHECK(bott_theta_inverse(F, l) * bott_theta(F, l) == EqKClass::one(G, 2));
  CHECK_THROWS_AS(bott_theta_inverse(F, 4), DomainError);
}

TEST_CASE("symmetric reduction") {
  Polynomial p = Polynomial::variable(3, 0).pow(3) + Polynomial::variable(3, 1).pow(3) + Polynomial::variable(3, 2).pow(3);
  CHECK(p.is_symmetric());
  Polynomial q = symmetric_reduce(p);
  CHECK(expand_elementary(q) == p);
  // p_3 = e1^3 - 3 e1 e2 + 3 e3
  Polynomial e1 = Polynomial::variable(3, 0), e2 = Polynomial::variable(3, 1), e3 = Polynomial::variable(3, 2);
  CHECK(q == e1.pow(3) - Polynomial::constant(3, 3) * e1 * e2 + Polynomial::constant(3, 3) * e3);
  CHECK_FALSE(Polynomial::variable(2, 0).is_symmetric());
  CHECK(Polynomial::elementary(3, 2).degree() == 2);
}

TEST_CASE("Cartier identity") {
  for (int n = 1; n <= 3; ++n)
    for (long p : {2L, 3L, 5L}) CHECK(cartier_identity_check(n, p));
}

TEST_CASE("inverse Bott element of a rank-one class") {
  auto omega = AugmentedTruncated::rank_one(2, "Omega");
  auto inv = bott_theta_rank_one(omega, 2).inverse();
  CHECK(inv == (AugmentedTruncated(2, 3) - omega) * Rat(1, 4));
  CHECK(inv * bott_theta_rank_one(omega, 2) == AugmentedTruncated(2, 1));
  auto x = AugmentedTruncated::symbol(3, "x");
  CHECK(x * x == AugmentedTruncated(3, 0));
  CHECK(bott_theta_rank_one(AugmentedTruncated::rank_one(3, "L"), 3).rank() == 3);
}
