#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tpow/exact.hpp"
#include "tpow/groups.hpp"

namespace tpow {

// Function on the conjugacy classes of a finite group with cyclotomic values.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Cyclotomic> values);

  static ClassFunction zero(const GroupPtr& g);
  static ClassFunction constant(const GroupPtr& g, const Cyclotomic& c);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at(size_t cls) const { return values_[cls]; }
  Cyclotomic& at(size_t cls) { return values_[cls]; }
  Cyclotomic dimension() const;
  bool is_zero() const;
  bool is_rational() const;

  ClassFunction conj() const;
  ClassFunction psi(long k) const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& c);
  ClassFunction operator-() const;
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& c) { return a *= c; }
  friend ClassFunction operator*(const Cyclotomic& c, ClassFunction a) { return a *= c; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_same(const ClassFunction& o) const;
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

// (1/|G|) sum_c |c| a(c) conj(b(c))
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::string> labels;
  std::vector<Partition> partitions;  // symmetric groups only

  size_t size() const { return irreducibles.size(); }
  // Multiplicities of the irreducibles; DomainError when x is not a virtual character.
  std::vector<Int> decompose(const ClassFunction& x) const;
  // Rational multiplicities; DomainError when some multiplicity is irrational.
  std::vector<Rat> coordinates(const ClassFunction& x) const;
  ClassFunction combine(const std::vector<Int>& mult) const;
  size_t index_of_partition(const Partition& p) const;
};

// Supported: symmetric groups, cyclic groups, and direct products of supported groups.
std::shared_ptr<const CharacterTable> character_table(const GroupPtr& G);
void set_character_cache_enabled(bool on);
void validate_orthogonality(const CharacterTable& t);

Int murnaghan_nakayama(const Partition& lambda, const Partition& mu);

// Kostka number: semistandard tableaux of shape lambda and content mu.
Int kostka_number(const Partition& lambda, const Partition& mu);
// Irreducible characters of S_l recovered from fixed-tabloid counts (traces of the
// permutation matrices on tabloids) through Young's rule; indexed like partitions(l).
std::vector<ClassFunction> young_rule_characters(int l);

ClassFunction induce(const ClassFunction& phi, const Embedding& e);
ClassFunction restrict(const ClassFunction& chi, const Embedding& e);
ClassFunction adams_psi_char(const ClassFunction& chi, long k);
ClassFunction exterior_power_char(const ClassFunction& chi, long k);
// lambda^0 .. lambda^kmax via Newton's identity.
std::vector<ClassFunction> exterior_powers(const ClassFunction& chi, long kmax);

ClassFunction trivial_character(const GroupPtr& G);
ClassFunction regular_character(const GroupPtr& G);
// Character of the natural permutation action on {0..degree-1}.
ClassFunction permutation_character(const GroupPtr& G);
ClassFunction sign_character(const GroupPtr& G);
// Outer tensor product on a product group whose factors are the groups of a and b.
ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b, const GroupPtr& product);
ClassFunction outer_product(const std::vector<ClassFunction>& parts, const GroupPtr& product);
// Value of chi at an arbitrary element index.
const Cyclotomic& value_at_element(const ClassFunction& chi, size_t elem);

struct IdealMembership {
  bool member = false;
  // x = sum_i generators[i] * multipliers[i] when member
  std::vector<ClassFunction> multipliers;
};

// Membership of x in the ideal of R(G) (or R(G)[1/l] when l > 0) spanned by the generators.
IdealMembership ideal_membership(const ClassFunction& x, const std::vector<ClassFunction>& generators, long l = 0);

// R(C_l) -> Z[zeta_l], t -> zeta_l; x must live on a cyclic group of order l.
Cyclotomic quotient_to_cyclotomic(const ClassFunction& x);
// Composition length modulo p: the class in K_0(C_p, F_p)/([F_p[C_p]]).
long modular_dimension_quotient(const Int& composition_length, long p);

}  // namespace tpow
