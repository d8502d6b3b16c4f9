#include "tpow/characters.hpp"
#include "tpow/linalg.hpp"

namespace tpow {

IdealMembership ideal_membership(const ClassFunction& x, const std::vector<ClassFunction>& generators, long l) {
  auto table = character_table(x.group());
  size_t n = table->size();
  std::vector<Rat> b = table->coordinates(x);
  IdealMembership res;
  for (const auto& q : b)
    if (l > 0 ? !localized_at_l_check(q, l) : q.get_den() != 1) return res;
  // columns: generator_i * chi_a
  MatZ A(n, std::vector<Int>(generators.size() * n));
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t a = 0; a < n; ++a) {
      auto col = table->decompose(generators[i] * table->irreducibles[a]);
      for (size_t r = 0; r < n; ++r) A[r][i * n + a] = col[r];
    }
  auto w = solve_integral(A, b, l);
  if (!w) return res;
  res.member = true;
  ClassFunction check = ClassFunction::zero(x.group());
  for (size_t i = 0; i < generators.size(); ++i) {
    ClassFunction m = ClassFunction::zero(x.group());
    for (size_t a = 0; a < n; ++a)
      if ((*w)[i * n + a] != 0) m += table->irreducibles[a] * Cyclotomic((*w)[i * n + a]);
    check += generators[i] * m;
    res.multipliers.push_back(std::move(m));
  }
  if (check != x) throw InvariantViolation("ideal witness does not reproduce the element");
  return res;
}

Cyclotomic quotient_to_cyclotomic(const ClassFunction& x) {
  const auto& G = *x.group();
  if (G.kind() != GroupKind::Cyclic || !is_prime(G.param()))
    throw DomainError("quotient to Z[zeta_l] needs a cyclic group of prime order");
  character_table(x.group())->decompose(x);
  // the defining character takes the value zeta_l at the generator, which is element 1
  return x.at(G.class_of(1));
}

long modular_dimension_quotient(const Int& composition_length, long p) {
  if (!is_prime(p)) throw DomainError("modulus must be prime");
  Int r = composition_length % Int(p);
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace tpow
