#include "doctest.h"
#include "tpow/characters.hpp"

using namespace tpow;

namespace {

size_t class_of_type(const GroupPtr& G, const Partition& t) {
  for (size_t c = 0; c < G->num_classes(); ++c)
    if (G->classes()[c].cycle_type == t) return c;
  return G->num_classes();
}

// n! / prod of hook lengths
Int hook_dimension(const Partition& p) {
  int n = 0;
  for (int r : p) n += r;
  Int prod = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      prod *= p[i] - j + leg;
    }
  return factorial(n) / prod;
}

}  // namespace

TEST_CASE("character table of S3") {
  auto S3 = FiniteGroup::symmetric(3);
  auto t = character_table(S3);
  const auto& std2 = t->irreducibles[t->index_of_partition({2, 1})];
  CHECK(std2.at(class_of_type(S3, {1, 1, 1})) == Cyclotomic(2));
  CHECK(std2.at(class_of_type(S3, {2, 1})) == Cyclotomic(0));
  CHECK(std2.at(class_of_type(S3, {3})) == Cyclotomic(-1));
  CHECK(t->irreducibles[t->index_of_partition({3})] == trivial_character(S3));
  CHECK(t->irreducibles[t->index_of_partition({1, 1, 1})] == sign_character(S3));
}

TEST_CASE("symmetric group tables are orthonormal with hook-length dimensions") {
  for (int l = 1; l <= 7; ++l) {
    auto t = character_table(FiniteGroup::symmetric(l));
    CHECK_NOTHROW(validate_orthogonality(*t));
    for (const auto& p : partitions(l))
      CHECK(t->irreducibles[t->index_of_partition(p)].dimension() == Cyclotomic(hook_dimension(p)));
  }
}

TEST_CASE("Murnaghan-Nakayama agrees with Young's rule on fixed tabloids") {
  for (int l = 1; l <= 5; ++l) {
    auto S = FiniteGroup::symmetric(l);
    auto brute = young_rule_characters(l);
    auto parts = partitions(l);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t c = 0; c < S->num_classes(); ++c)
        CHECK(brute[i].at(c) == Cyclotomic(murnaghan_nakayama(parts[i], S->classes()[c].cycle_type)));
  }
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka_number({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka_number({3, 2}, {2, 2, 1}) == 2);
  CHECK(kostka_number({2, 2}, {3, 1}) == 0);
  for (const auto& p : partitions(5)) CHECK(kostka_number(p, p) == 1);
  // K_{lambda,(1^n)} counts standard tableaux
  for (const auto& p : partitions(5)) CHECK(kostka_number(p, {1, 1, 1, 1, 1}) == hook_dimension(p));
}

TEST_CASE("cyclic and product tables") {
  auto C4 = FiniteGroup::cyclic(4);
  auto t = character_table(C4);
  CHECK(t->size() == 4);
  CHECK_NOTHROW(validate_orthogonality(*t));
  auto P = FiniteGroup::product({FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)});
  auto tp = character_table(P);
  CHECK(tp->size() == 6);
  CHECK_NOTHROW(validate_orthogonality(*tp));
}

TEST_CASE("induction and restriction satisfy Frobenius reciprocity") {
  auto S4 = FiniteGroup::symmetric(4);
  auto tS = character_table(S4);
  for (const auto& sub : subgroups(S4)) {
    if (sub->kind() != GroupKind::Cyclic && sub->kind() != GroupKind::Symmetric) continue;
    const auto& e = cached_embedding(sub, S4);
    auto tH = character_table(sub);
    for (const auto& phi : tH->irreducibles)
      for (const auto& chi : tS->irreducibles)
        CHECK(inner_product(induce(phi, e), chi) == inner_product(phi, restrict(chi, e)));
  }
}

TEST_CASE("exterior powers of the permutation character") {
  for (int l = 1; l <= 5; ++l) {
    auto S = FiniteGroup::symmetric(l);
    auto lam = exterior_powers(permutation_character(S), l);
    CHECK(lam[0] == trivial_character(S));
    CHECK(lam[l] == sign_character(S));
    for (int i = 0; i <= l; ++i) CHECK(lam[i].dimension() == Cyclotomic(binomial(l, i)));
  }
}

TEST_CASE("regular ideal of R(C_l)") {
  auto C5 = FiniteGroup::cyclic(5);
  auto reg = regular_character(C5);
  CHECK(quotient_to_cyclotomic(reg).is_zero());
  CHECK(quotient_to_cyclotomic(trivial_character(C5)) == Cyclotomic(1));
  auto m = ideal_membership(reg * Cyclotomic(3), {reg});
  REQUIRE(m.member);
  CHECK(reg * m.multipliers[0] == reg * Cyclotomic(3));
  CHECK_FALSE(ideal_membership(trivial_character(C5), {reg}).member);
  CHECK(modular_dimension_quotient(7, 5) == 2);
}
