#include "doctest.h"
#include "tpow/groups.hpp"

using namespace tpow;

TEST_CASE("permutations") {
  Perm a{1, 2, 0}, b{1, 0, 2};
  CHECK(perm_compose(a, b) == Perm{2, 1, 0});
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
  CHECK(perm_sign(a) == 1);
  CHECK(perm_sign(b) == -1);
  CHECK(cycle_type(Perm{1, 0, 3, 4, 2}) == Partition{3, 2});
  CHECK(perm_power(a, 3) == perm_identity(3));
}

TEST_CASE("partitions in descending lexicographic order") {
  CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 0; n <= 7; ++n) CHECK(partitions(n).size() == counts[n]);
}

TEST_CASE("symmetric and cyclic groups") {
  for (int l = 1; l <= 6; ++l) {
    auto S = FiniteGroup::symmetric(l);
    long fact = 1;
    for (int k = 2; k <= l; ++k) fact *= k;
    CHECK(S->order() == static_cast<size_t>(fact));
    CHECK(S->num_classes() == partitions(l).size());
    size_t total = 0;
    for (const auto& c : S->classes()) total += c.size;
    CHECK(total == S->order());
  }
  auto C = FiniteGroup::cyclic(5);
  CHECK(C->order() == 5);
  CHECK(C->num_classes() == 5);
  CHECK(C->element_order(C->find(Perm{1, 2, 3, 4, 0})) == 5);
  CHECK(FiniteGroup::symmetric(4).get() == FiniteGroup::symmetric(4).get());
}

TEST_CASE("products and Young subgroups") {
  auto Y = FiniteGroup::young({2, 3});
  CHECK(Y->order() == 12);
  CHECK(Y->degree() == 5);
  CHECK(Y->num_classes() == 6);
  for (size_t e = 0; e < Y->order(); ++e) CHECK(Y->from_factor_indices(Y->factor_indices(e)) == e);
}

TEST_CASE("subgroup lattices") {
  CHECK(subgroups(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(subgroups(FiniteGroup::cyclic(4)).size() == 3);
  CHECK(subgroups(FiniteGroup::symmetric(4)).size() == 30);
  auto S3 = FiniteGroup::symmetric(3);
  CHECK(subgroups(S3).back().get() == S3.get());
  CHECK(subgroups(S3).front()->order() == 1);
}

TEST_CASE("G-sets and power decompositions") {
  auto S3 = FiniteGroup::symmetric(3);
  auto X = principal_gset(S3);
  X.validate();
  CHECK(X.orbits().size() == 1);
  for (const auto& sub : subgroups(S3)) {
    auto Y = coset_gset(S3, sub);
    Y.validate();
    CHECK(Y.size * sub->order() == 6);
    CHECK(Y.stabilizer(0).size() == sub->order());
  }
  for (long l : {2L, 5L}) {
    auto d = decompose_power_gset(FiniteGroup::cyclic(3), l);
    CHECK(d.power_size() == d.diagonal_size() + d.model_size());
    CHECK_NOTHROW(verify_power_decomposition(d));
  }
  auto C4 = FiniteGroup::cyclic(4);
  for (const auto& sub : subgroups(C4)) {
    auto d = decompose_power_gset(C4, 3, sub);
    CHECK_NOTHROW(verify_power_decomposition(d));
  }
}
