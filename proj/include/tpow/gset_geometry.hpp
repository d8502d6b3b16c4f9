#pragma once

#include <string>
#include <vector>

#include "tpow/characters.hpp"
#include "tpow/groups.hpp"

namespace tpow {

// Equivariant vector bundle on a finite G-set over the point, stored per orbit as a
// virtual character of the stabilizer of the orbit representative.
struct EquivariantBundle {
  FiniteGSet X;
  std::vector<size_t> reps;
  std::vector<GroupPtr> stabilizers;
  std::vector<ClassFunction> fibers;
  // orbit index and a transporter a_x with a_x . rep = x, per point
  std::vector<size_t> orbit_of;
  std::vector<size_t> transporter;

  // Trace of h on the fiber at x; h must fix x.
  Cyclotomic fiber_trace(size_t x, size_t h) const;
  Cyclotomic total_dimension() const;
};

// Chooser receives the orbit index and the stabilizer group and returns the fiber character.
template <class Chooser>
EquivariantBundle make_bundle(const FiniteGSet& X, Chooser choose);
EquivariantBundle trivial_line_bundle(const FiniteGSet& X);
EquivariantBundle make_bundle_from(const FiniteGSet& X, const std::vector<ClassFunction>& fibers);

// The subgroup object of G with exactly the given elements (searched among subgroups(G)).
GroupPtr subgroup_with_elements(const GroupPtr& G, std::vector<size_t> elems);

// Character of H on the sections of E; H is a subgroup of the bundle group.
ClassFunction sections_pushforward(const EquivariantBundle& E, const GroupPtr& H);

// Characters on C_l x H attached to E^{(x) l} on X^l.
struct TensorPowerCharacters {
  GroupPtr group;           // C_l x H
  ClassFunction direct;     // enumeration of fixed points of X^l
  ClassFunction diagonal;   // f_*(tau^l E): the diagonal part
  ClassFunction free_part;  // regular(C_l) (x) y from the free orbits
  ClassFunction y;          // H-character of sections over the representative set
  ClassFunction tau_of_pushforward;  // tau^l(f_* E) from the character of f_* E
};

TensorPowerCharacters tensor_power_characters(const EquivariantBundle& E, const PowerDecomposition& d,
                                              const GroupPtr& H, bool enumerate);

ClassFunction tensor_power_bundle(const EquivariantBundle& E, const PowerDecomposition& d, const GroupPtr& H);

struct GBundleCongruence {
  bool pass = false;
  std::string detail;
  ClassFunction left;   // tau^l(f_* E)
  ClassFunction right;  // f_*(tau^l E)
  ClassFunction witness;  // multiplier of regular(C_l) (x) 1
  bool enumerated = false;
};

// G' == nullptr selects principal mode; fiber_choice 0 = trivial line, 1 = nontrivial choice.
GBundleCongruence gbundle_congruence_check(const GroupPtr& G, const GroupPtr& coset_sub, int fiber_choice, long l,
                                const GroupPtr& H);

// psi^l(Ind phi) == Ind(psi^l phi) for l prime to |G|.
bool induction_adams_check(const GroupPtr& G, const GroupPtr& sub, const ClassFunction& phi, long l);

struct K1Element {
  long l = 0;
  std::vector<Int> exponents;  // exponent of beta on the chi^j-isotypic part
  std::string str() const;
};

// tau^l on the class of (k, beta^e) restricted to C_l, as exponent data.
K1Element k1_tensor_power(long l, long beta_exponent = 1);
// sum_{i=1}^{l-1} (-1)^{l-i} binomial(l,i) i / l
Rat binomial_identity_sum(long l);
bool binomial_identity_check(long l);

// ------------------------------------------------------------ template definition

template <class Chooser>
EquivariantBundle make_bundle(const FiniteGSet& X, Chooser choose) {
  std::vector<ClassFunction> fibers;
  auto orbs = X.orbits();
  for (size_t o = 0; o < orbs.size(); ++o)
    fibers.push_back(choose(o, subgroup_with_elements(X.group, X.stabilizer(orbs[o][0]))));
  return make_bundle_from(X, fibers);
}

}  // namespace tpow
