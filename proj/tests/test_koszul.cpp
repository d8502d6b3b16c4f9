#include "doctest.h"
#include "tpow/koszul.hpp"

using namespace tpow;

TEST_CASE("graded polynomial algebras") {
  for (int n = 1; n <= 4; ++n) {
    GradedAlgebra A(n);
    for (int d = 0; d <= 5; ++d) CHECK(A.dimension(d) == binomial(d + n - 1, static_cast<unsigned long>(n - 1)));
  }
  GradedAlgebra W(2, {}, {1, 2});
  CHECK(W.dimension(4) == 3);
  CHECK(GradedAlgebra(2).basis(1) == std::vector<Monomial>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(GradedAlgebra(2).degree(gpoly_add(gpoly_variable(2, 0), gpoly_monomial({0, 0}))), DomainError);
}

TEST_CASE("incremental rank over Q and F_p") {
  IncrementalRank q(2, {0}), f(2, {2});
  for (auto* r : {&q, &f}) {
    CHECK(r->add({Rat(1), Rat(1)}));
    r->add({Rat(1), Rat(-1)});
  }
  CHECK(q.rank() == 2);
  CHECK(f.rank() == 1);
  CHECK(f.contains({Rat(3), Rat(1)}));
  CHECK(rank_over_field(MatQ{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}, {2}) == 1);
}

TEST_CASE("Koszul homology of linear ideals matches the exterior-power formula") {
  auto x = gpoly_variable(2, 0), y = gpoly_variable(2, 1);
  for (long p : {0L, 3L}) {
    GradedAlgebra A(2, {p});
    for (const auto& gens : std::vector<std::vector<GPoly>>{{x, y}, {x, y, gpoly_add(x, y)}, {x}, {x, gpoly_add(x, y, Rat(-1))}}) {
      auto h = koszul_homology_dimensions(A, gens, 5);
      CHECK(h.dd_zero);
      CHECK(h.dims == koszul_linear_oracle(A, gens, 5).dims);
    }
  }
  GradedAlgebra A(2);
  auto h = koszul_homology_dimensions(A, {x, y, gpoly_add(x, y)}, 5);
  CHECK(h.table_str() == "H_0: 1 0 0 0 0 0; H_1: 0 1 0 0 0 0; H_2: 0 0 0 0 0 0; H_3: 0 0 0 0 0 0");
}

TEST_CASE("Koszul homology of a regular sequence of squares") {
  GradedAlgebra A(2);
  auto x = gpoly_variable(2, 0), y = gpoly_variable(2, 1);
  auto h = koszul_homology_dimensions(A, {gpoly_mul(x, x), gpoly_mul(y, y)}, 4);
  // k[x,y]/(x^2, y^2) = 1 + 2t + t^2
  CHECK(h.dims[0] == std::vector<size_t>{1, 2, 1, 0, 0});
  CHECK(h.dims[1] == std::vector<size_t>{0, 0, 0, 0, 0});
  CHECK(h.dims[2] == std::vector<size_t>{0, 0, 0, 0, 0});
}

TEST_CASE("unit ideal has acyclic Koszul complex") {
  GradedAlgebra A(1);
  auto h = koszul_homology_dimensions(A, {gpoly_monomial({0}), gpoly_variable(1, 0)}, 3);
  for (const auto& row : h.dims)
    for (size_t v : row) CHECK(v == 0);
}

TEST_CASE("augmentation Koszul complex is contractible") {
  for (long l = 1; l <= 6; ++l) {
    auto c = augmentation_homotopy_check(l);
    CHECK(c.dd_zero);
    CHECK(c.homotopy_identity);
    for (long i = 0; i <= l; ++i) CHECK(c.ranks[i] == binomial(l, static_cast<unsigned long>(i)));
  }
}

TEST_CASE("conormal module of the small diagonal") {
  for (int n = 1; n <= 2; ++n)
    for (long l = 1; l <= 3; ++l) {
      auto r = diagonal_conormal(n, l, 3);
      CHECK(r.pass());
      CHECK(r.relations_ok);
    }
  auto r = diagonal_conormal(1, 2, 2);
  // k[x1,x2] with I = (x1 - x2): I/I^2 is free of rank one over k[x], generated in degree 1
  CHECK(r.degrees[1].conormal_dim == 1);
  CHECK(r.degrees[2].conormal_dim == 1);
}

TEST_CASE("invariant sections generate, with the minimal multidegree") {
  const int expected[3][4] = {{0, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 2, 3}};
  for (int r = 0; r <= 2; ++r)
    for (long l = 1; l <= 3; ++l) {
      auto s = invariant_sections_generate(r, l, 4);
      CHECK(s.invariant);
      REQUIRE(s.certified);
      CHECK(s.certified_at == expected[r][l]);
    }
  auto s = invariant_sections_generate(1, 2, 4);
  CHECK(s.section_strs.size() == s.sections.size());
  CHECK(invariant_sections_generate(1, 2, 4, {2}).certified);
}

TEST_CASE("alpha is onto the ideal of the diagonal") {
  auto a = alpha_surjective(AlphaMode::Projective, 2, 3, 4);
  CHECK(a.compatible);
  CHECK(a.cokernel_dims[1] == 1);
  CHECK(a.surjective);
  CHECK(a.surjective_from == 2);
  for (int n = 1; n <= 2; ++n)
    for (long l = 1; l <= 3; ++l) {
      auto b = alpha_surjective(AlphaMode::Affine, n, l, 4);
      CHECK(b.surjective);
      CHECK(b.surjective_from == 0);
    }
}
