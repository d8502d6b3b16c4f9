#include "doctest.h"
#include "tpow/gset_geometry.hpp"

using namespace tpow;

TEST_CASE("sections over coset spaces") {
  auto S3 = FiniteGroup::symmetric(3);
  for (const auto& sub : subgroups(S3)) {
    // sections of the trivial line on S3/K form the induced trivial character
    auto sec = sections_pushforward(trivial_line_bundle(coset_gset(S3, sub)), S3);
    CHECK(sec == induce(trivial_character(sub), cached_embedding(sub, S3)));
  }
  auto A3 = subgroups(S3)[4];
  CHECK(sections_pushforward(trivial_line_bundle(coset_gset(S3, A3)), S3) ==
        trivial_character(S3) + sign_character(S3));
  auto X = principal_gset(S3);
  CHECK(sections_pushforward(trivial_line_bundle(X), S3) == regular_character(S3));
  CHECK(trivial_line_bundle(X).total_dimension() == Cyclotomic(6));
}

TEST_CASE("tensor power characters of the trivial line on C3") {
  auto C3 = FiniteGroup::cyclic(3);
  auto d = decompose_power_gset(C3, 2, nullptr);
  auto t = tensor_power_characters(trivial_line_bundle(d.X), d, C3, true);
  CHECK(t.direct == t.diagonal + t.free_part);
  CHECK(t.direct.dimension() == Cyclotomic(9));
  CHECK(t.diagonal.dimension() == Cyclotomic(3));
}

TEST_CASE("tensor-power congruence over finite G-sets") {
  auto C3 = FiniteGroup::cyclic(3);
  for (const auto& H : subgroups(C3))
    for (int fiber = 0; fiber <= 1; ++fiber) {
      auto r = gbundle_congruence_check(C3, nullptr, fiber, 2, H);
      CHECK(r.pass);
      CHECK(r.enumerated);
    }
  auto S3 = FiniteGroup::symmetric(3);
  for (const auto& K : subgroups(S3)) CHECK(gbundle_congruence_check(S3, K, 1, 5, S3).pass);
}

TEST_CASE("Adams operations commute with induction for l prime to |G|") {
  auto S3 = FiniteGroup::symmetric(3);
  for (const auto& sub : subgroups(S3))
    for (const auto& phi : character_table(sub)->irreducibles) {
      CHECK(induction_adams_check(S3, sub, phi, 5));
      CHECK(induction_adams_check(S3, sub, phi, 7));
    }
}

TEST_CASE("tensor power on K_1") {
  CHECK(k1_tensor_power(2).str() == "(1, -1)");
  CHECK(k1_tensor_power(3).str() == "(2, -1, -1)");
  CHECK(k1_tensor_power(5).str() == "(4, -1, -1, -1, -1)");
  CHECK(k1_tensor_power(7).str() == "(6, -1, -1, -1, -1, -1, -1)");
  CHECK(k1_tensor_power(3, 2).str() == "(4, -2, -2)");
  CHECK_THROWS_AS(k1_tensor_power(4), DomainError);
}

TEST_CASE("alternating binomial sum") {
  for (long l : {2L, 3L, 5L, 7L, 11L, 13L}) {
    CHECK(binomial_identity_sum(l) == -1);
    CHECK(binomial_identity_check(l));
  }
  // i binomial(l,i) / l = binomial(l-1,i-1), so the sum is (1-1)^{l-1} minus the i = l term
  for (long l = 2; l <= 20; ++l) CHECK(binomial_identity_sum(l) == -1);
}
