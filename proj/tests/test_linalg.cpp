#include "doctest.h"
#include "tpow/linalg.hpp"

using namespace tpow;

namespace {

MatZ mul(const MatZ& a, const MatZ& b) {
  MatZ c(a.size(), std::vector<Int>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("Smith normal form") {
  MatZ A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(A);
  CHECK(s.diagonal() == std::vector<Int>{2, 6, 12});
  CHECK(mul(mul(s.U, A), s.V) == s.D);
  CHECK(s.rank == 3);
}

TEST_CASE("integral and localized solutions") {
  MatZ A{{2, 0}, {0, 3}};
  CHECK(solve_integral(A, {Rat(4), Rat(9)}) == std::vector<Rat>{2, 3});
  CHECK_FALSE(solve_integral(A, {Rat(1), Rat(0)}).has_value());
  auto w = solve_integral(A, {Rat(1), Rat(0)}, 2);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == Rat(1, 2));
  CHECK_FALSE(solve_integral(A, {Rat(0), Rat(1)}, 2).has_value());
}

TEST_CASE("ranks over Q and F_p") {
  MatZ A{{1, 2}, {3, 4}};
  CHECK(rank_rational(to_rational(A)) == 2);
  CHECK(rank_over(A, 2) == 1);
  CHECK(rank_over(A, 3) == 2);
  CHECK(rank_mod_p({{2, 4}, {1, 2}}, 5) == 1);
}

TEST_CASE("kernels") {
  MatQ A{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
  auto K = kernel_rational(A);
  REQUIRE(K.size() == 1);
  for (const auto& row : A) CHECK(row[0] * K[0][0] + row[1] * K[0][1] + row[2] * K[0][2] == 0);
  auto Z = integer_kernel(MatZ{{2, 4}});
  REQUIRE(Z.size() == 1);
  CHECK(2 * Z[0][0] + 4 * Z[0][1] == 0);
}
