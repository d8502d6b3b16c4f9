#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tpow/exact.hpp"

namespace tpow {

// Permutation of {0..m-1} stored as its image list.
using Perm = std::vector<int>;
using Partition = std::vector<int>;

Perm perm_identity(int m);
// (a*b)(x) = a(b(x))
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_power(const Perm& a, long k);
bool perm_valid(const Perm& a);
int perm_sign(const Perm& a);
// Cycle lengths in decreasing order, fixed points included.
Partition cycle_type(const Perm& a);
std::vector<std::vector<int>> perm_cycles(const Perm& a);

// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);
std::string partition_str(const Partition& p);

enum class GroupKind { Symmetric, Cyclic, Product, Generic };

struct ConjugacyClass {
  size_t rep = 0;  // element index
  size_t size = 0;
  Partition cycle_type;
  std::vector<size_t> members;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  static constexpr size_t kDefaultCap = 50000;

  static GroupPtr symmetric(int l);
  static GroupPtr cyclic(int n);
  static GroupPtr product(const std::vector<GroupPtr>& factors);
  static GroupPtr young(const std::vector<int>& blocks);
  static GroupPtr generated(int degree, const std::vector<Perm>& gens, const std::string& name,
                            size_t cap = kDefaultCap);
  static GroupPtr cyclic_generated(int degree, const Perm& gen, const std::string& name);

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int param() const { return param_; }
  size_t order() const { return elements_.size(); }
  const std::vector<GroupPtr>& factors() const { return factors_; }

  const Perm& element(size_t i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  // Index of a permutation, or npos when it is not in the group.
  size_t find(const Perm& p) const;
  size_t index_of(const Perm& p) const;
  size_t identity() const { return identity_; }
  size_t mul(size_t a, size_t b) const;
  size_t inv(size_t a) const { return inverse_[a]; }
  size_t power(size_t a, long k) const;
  size_t element_order(size_t a) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  size_t num_classes() const { return classes_.size(); }
  size_t class_of(size_t elem) const { return class_of_[elem]; }
  // Class of an arbitrary permutation of this group.
  size_t class_of_perm(const Perm& p) const;
  // class c -> class of g^k for g in c
  std::vector<size_t> power_class_map(long k) const;

  // For products: factor element indices of an element (first factor first).
  std::vector<size_t> factor_indices(size_t elem) const;
  size_t from_factor_indices(const std::vector<size_t>& idx) const;
  std::vector<size_t> factor_classes(size_t cls) const;
  size_t class_from_factor_classes(const std::vector<size_t>& idx) const;

  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  FiniteGroup() = default;
  void finish();
  void build_classes_generic();

  GroupKind kind_ = GroupKind::Generic;
  std::string name_;
  int degree_ = 0;
  int param_ = 0;
  std::vector<GroupPtr> factors_;
  std::vector<Perm> elements_;
  std::map<Perm, size_t> index_;
  std::vector<size_t> inverse_;
  size_t identity_ = 0;
  std::vector<std::vector<unsigned>> table_;
  std::vector<ConjugacyClass> classes_;
  std::vector<size_t> class_of_;
  std::map<Partition, size_t> class_by_type_;
};

// Every subgroup of G, smallest order first. Cyclic subgroups carry the Cyclic kind;
// G itself is returned as the same object.
std::vector<GroupPtr> subgroups(const GroupPtr& G);

// Inclusion of a subgroup whose permutations live in the ambient group's degree.
struct Embedding {
  GroupPtr sub;
  GroupPtr ambient;
  std::vector<size_t> element_map;
  std::vector<size_t> class_map;
};

Embedding make_embedding(const GroupPtr& sub, const GroupPtr& ambient);
// Memoized make_embedding keyed by the two group objects.
const Embedding& cached_embedding(const GroupPtr& sub, const GroupPtr& ambient);

// Finite set with a left action, act[g][x].
struct FiniteGSet {
  GroupPtr group;
  size_t size = 0;
  std::vector<std::vector<size_t>> act;
  std::vector<std::string> labels;

  size_t apply(size_t g, size_t x) const { return act[g][x]; }
  void validate() const;
  // Orbits, each listed with its first point as representative.
  std::vector<std::vector<size_t>> orbits() const;
  std::vector<size_t> stabilizer(size_t x) const;
  FiniteGSet restrict_to(const Embedding& e) const;
};

// G acting on itself by x -> x * g^{-1}.
FiniteGSet principal_gset(const GroupPtr& G);
// G acting on left cosets G/G' by left multiplication.
FiniteGSet coset_gset(const GroupPtr& G, const GroupPtr& sub);

// Decomposition X^l = Delta(X) + C_l x M x X (principal) or Delta(X) + C_l x M (coset).
struct PowerDecomposition {
  GroupPtr group;
  long l = 0;
  bool principal = true;
  FiniteGSet X;
  // principal: tuples of group element indices with first entry the identity;
  // coset: tuples of points of X
  std::vector<std::vector<size_t>> M;
  std::map<std::vector<size_t>, size_t> M_index;

  // Point of X^l (as a tuple) hit by (c^j, M[m], x); x is ignored in coset mode.
  std::vector<size_t> phi(size_t j, size_t m, size_t x) const;
  // Left action of (c^i, g) on X^l: (c^i g . y)_k = g . y_{k+i}.
  std::vector<size_t> act_power(size_t i, size_t g, const std::vector<size_t>& y) const;
  // Action of (c^i, g) on the index set C_l x M x X; returns (j', m', x').
  std::array<size_t, 3> act_model(size_t i, size_t g, size_t j, size_t m, size_t x) const;
  size_t power_size() const;
  size_t diagonal_size() const { return X.size; }
  size_t model_size() const;
};

PowerDecomposition decompose_power_gset(const GroupPtr& G, long l, const GroupPtr& coset_sub = nullptr);

// Throws InvariantViolation unless the decomposition is a C_l x G equivariant bijection.
void verify_power_decomposition(const PowerDecomposition& d);

}  // namespace tpow
