#include "doctest.h"
#include "tpow/exact.hpp"

using namespace tpow;

TEST_CASE("binomial coefficients follow Pascal's rule") {
  for (long n = 1; n <= 30; ++n)
    for (unsigned long k = 1; k < static_cast<unsigned long>(n); ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("primality agrees with trial division") {
  for (long n = -3; n <= 200; ++n) {
    bool trial = n >= 2;
    for (long d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("roots of unity") {
  for (long p : {2L, 3L, 5L, 7L}) {
    Cyclotomic s(0);
    for (long k = 0; k < p; ++k) s += Cyclotomic::zeta_power(p, k);
    CHECK(s.is_zero());
    Cyclotomic one_minus = Cyclotomic(1) - Cyclotomic::zeta_power(p, 1);
    CHECK(one_minus.norm() == p);
    CHECK(one_minus * one_minus.inverse() == Cyclotomic(1));
  }
  CHECK(Cyclotomic::zeta_power(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta_power(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta_power(3, 1).conj() == Cyclotomic::zeta_power(3, 2));
  // zeta_3 lifted into Q(zeta_6) is zeta_6^2
  CHECK(Cyclotomic::zeta_power(3, 1).lifted(6) == Cyclotomic::zeta_power(6, 2));
}

TEST_CASE("localization at l") {
  CHECK(localized_at_l_check(Rat(3, 8), 2));
  CHECK_FALSE(localized_at_l_check(Rat(1, 6), 2));
  LocalizedAtL a(Rat(1, 4), 2);
  CHECK(a.is_unit());
  CHECK((a * a.inverse()).value() == 1);
  CHECK_FALSE(LocalizedAtL(Rat(3), 2).is_unit());
  CHECK_THROWS_AS(LocalizedAtL(Rat(1, 3), 2), DomainError);
}

TEST_CASE("integer helpers") {
  CHECK(gcd_long(12, 18) == 6);
  CHECK(lcm_long(4, 6) == 12);
  CHECK(mod_floor(-1, 5) == 4);
  Rat q(-3, 6);
  q.canonicalize();
  CHECK(to_string(q) == "-1/2");
}
