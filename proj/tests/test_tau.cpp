#include "doctest.h"
#include "tpow/tau.hpp"

using namespace tpow;

namespace {

size_t class_of_type(const GroupPtr& G, const Partition& t) {
  for (size_t c = 0; c < G->num_classes(); ++c)
    if (G->classes()[c].cycle_type == t) return c;
  return G->num_classes();
}

}  // namespace

TEST_CASE("tau^2(1 - h^-1) on P^1") {
  auto S2 = FiniteGroup::symmetric(2);
  EqKClass expected = EqKClass::tensor(sign_character(S2), KClassPn::h_power(1, -2)) -
                      EqKClass::tensor(regular_character(S2), KClassPn::h_power(1, -1)) + EqKClass::one(S2, 1);
  for (TauRoute r : all_routes()) {
    EqKClass t = tau_internal(hpoly_parse("1 - h^-1"), 2, 1, r);
    CHECK(t == expected);
    CHECK(t.value_at(class_of_type(S2, {1, 1})).is_zero());
    CHECK(t.value_at(class_of_type(S2, {2})) == KClassPn(1, {Rat(0), Rat(2)}));
  }
}

TEST_CASE("tau^l of an integer on the point is d^(number of cycles)") {
  for (long l = 1; l <= 5; ++l) {
    auto S = FiniteGroup::symmetric(static_cast<int>(l));
    for (long d = -3; d <= 4; ++d) {
      EqKClass t = tau_internal(hpoly_constant(d), l, 0, TauRoute::Binomial);
      for (size_t c = 0; c < S->num_classes(); ++c) {
        const auto& type = S->classes()[c].cycle_type;
        Int expect = 1;
        for (size_t k = 0; k < type.size(); ++k) expect *= d >= 0 ? d : -d;
        if (d < 0) {
          // (-1)^l sgn(sigma) |d|^cycles
          long sign = (l % 2 ? -1 : 1) * ((l - static_cast<long>(type.size())) % 2 ? -1 : 1);
          expect *= sign;
        }
        CHECK(t.value_at(c).rank() == Rat(expect));
      }
    }
  }
}

TEST_CASE("permutation trace oracle matches every route on genuine classes") {
  for (const char* e : {"h", "h + h^-1", "2 + h^2", "h^-1 + h + h^3"})
    for (long l = 1; l <= 3; ++l)
      for (int n = 0; n <= 2; ++n) {
        HPoly x = hpoly_parse(e);
        EqKClass o = tensor_power_trace_oracle(x, l, n);
        for (TauRoute r : all_routes()) CHECK(tau_internal(x, l, n, r) == o);
      }
}

TEST_CASE("symbol forms") {
  HPoly x = hpoly_parse("h - 1");
  auto b = tau_external(x, 2);
  auto c = tau_external_compositions(x, 2);
  CHECK(evaluate_symbols(b, 2, 1) == evaluate_symbols(c, 2, 1));
  CHECK(canonicalize(b).size() == b.size());
  CHECK_FALSE(symbols_str(b).empty());
}

TEST_CASE("Kunneth push-forward") {
  for (long l = 1; l <= 4; ++l)
    for (int n = 0; n <= 2; ++n)
      for (long m = 0; m <= 3; ++m)
        CHECK(kunneth_pushforward(tau_external(HPoly{{m, 1}}, l), l, n) ==
              tau_internal(hpoly_constant(binomial(n + m, static_cast<unsigned long>(n))), l, 0, TauRoute::Binomial));
  CHECK_THROWS_AS(kunneth_pushforward(tau_external(HPoly{{-1, 1}}, 2), 2, 1), DomainError);
}

TEST_CASE("restriction to Young and cyclic subgroups") {
  HPoly x = hpoly_parse("h - 2*h^-1");
  auto Y = FiniteGroup::young({1, 2});
  EqKClass lhs = restrict_eqk(tau_internal(x, 3, 1, TauRoute::Binomial), Y);
  EqKClass rhs = outer_product({tau_internal(x, 1, 1, TauRoute::Binomial), tau_internal(x, 2, 1, TauRoute::Binomial)}, Y);
  CHECK(lhs == rhs);
  auto C3 = cyclic_in_symmetric(3);
  EqKClass res = restrict_eqk(tau_internal(HPoly{{1, 1}}, 3, 2, TauRoute::Binomial), C3);
  CHECK(res == EqKClass::tensor(trivial_character(C3), KClassPn::h_power(2, 3)));
}

TEST_CASE("zero section") {
  auto S2 = FiniteGroup::symmetric(2);
  EqKClass w = EqKClass::one(S2, 0);
  CHECK(zero_section_pushforward(w, 1) == EqKClass::from_base(S2, KClassPn::from_hpoly(1, hpoly_parse("1 - h^-1"))));
  CHECK_THROWS_AS(zero_section_pushforward(EqKClass::one(S2, 1), 1), DomainError);
}

TEST_CASE("permutation module characters") {
  for (long l = 1; l <= 5; ++l) {
    auto S = FiniteGroup::symmetric(static_cast<int>(l));
    CHECK(permutation_module_character(l) == reduced_permutation_character(l) + trivial_character(S));
    CHECK(permutation_module_character(l).dimension() == Cyclotomic(l));
  }
}

TEST_CASE("route names") {
  for (TauRoute r : all_routes()) CHECK(parse_route(route_name(r)) == r);
  CHECK_THROWS_AS(parse_route("nope"), DomainError);
}
