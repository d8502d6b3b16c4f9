#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpow/characters.hpp"
#include "tpow/linalg.hpp"

namespace tpow {

// Exponent vector of a monomial.
using Monomial = std::vector<int>;
// Polynomial with rational coefficients, zero terms never stored.
using GPoly = std::map<Monomial, Rat>;

GPoly gpoly_mul(const GPoly& a, const GPoly& b);
GPoly gpoly_add(const GPoly& a, const GPoly& b, const Rat& scale = 1);
GPoly gpoly_variable(int nvars, int v);
GPoly gpoly_monomial(const Monomial& m, const Rat& c = 1);
std::string gpoly_str(const GPoly& p);

// 0 for the rationals, otherwise a prime p.
struct FieldDescriptor {
  long p = 0;
  std::string str() const;
};

// Rank over the field; entries must have denominators prime to p.
size_t rank_over_field(const MatQ& m, const FieldDescriptor& k);

// Row space built one vector at a time; rank is exact over Q or F_p.
class IncrementalRank {
 public:
  IncrementalRank(size_t ncols, FieldDescriptor k);
  // Returns true when v is independent of the rows added so far.
  bool add(const std::vector<Rat>& v);
  bool contains(const std::vector<Rat>& v) const;
  size_t rank() const { return k_.p ? modrows_.size() : rows_.size(); }
  size_t ncols() const { return ncols_; }

 private:
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  std::vector<std::int64_t> reduce_mod(std::vector<std::int64_t> v) const;
  std::vector<std::int64_t> to_mod(const std::vector<Rat>& v) const;

  size_t ncols_;
  FieldDescriptor k_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::vector<std::int64_t>> modrows_;
  std::vector<size_t> pivots_;
};

// Polynomial algebra k[x_1..x_n] with positive integer variable degrees.
class GradedAlgebra {
 public:
  explicit GradedAlgebra(int nvars, FieldDescriptor k = {}, std::vector<int> weights = {});
  int nvars() const { return nvars_; }
  const FieldDescriptor& field() const { return k_; }
  int degree(const Monomial& m) const;
  int degree(const GPoly& p) const;  // throws unless homogeneous
  // Monomials of degree d in graded-lex order (largest first exponent first).
  std::vector<Monomial> basis(int d) const;
  size_t dimension(int d) const { return basis(d).size(); }

 private:
  int nvars_;
  FieldDescriptor k_;
  std::vector<int> weights_;
};

// One exact matrix per internal degree 0..bound; rows index the target basis.
struct GradedMap {
  int bound = 0;
  std::vector<size_t> source_dims, target_dims;
  std::vector<MatQ> blocks;
  GradedMap compose_after(const GradedMap& first) const;  // this o first
  bool is_zero() const;
};

// Graded module with a finite group acting degreewise by matrices on a fixed basis.
struct EquivariantGradedModule {
  GroupPtr group;
  std::vector<size_t> dims;
  std::vector<std::vector<MatQ>> action;  // [degree][element index]
  ClassFunction character(int d) const;
  // rho(g) rho(h) = rho(gh) for every pair and rho(e) = 1
  bool satisfies_relations() const;
};

// ------------------------------------------------------------------ Koszul complexes

struct KoszulComplex {
  const GradedAlgebra* algebra = nullptr;
  std::vector<GPoly> generators;
  int bound = 0;
  // differentials[i] : K_i -> K_{i-1} for i = 1..m, as graded maps
  std::vector<GradedMap> differentials;
  // basis of K_i in degree d: (subset mask, monomial)
  std::vector<std::vector<std::vector<std::pair<unsigned, Monomial>>>> bases;
};

KoszulComplex koszul_complex(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound);

struct KoszulHomology {
  int bound = 0;
  std::vector<std::vector<size_t>> dims;  // [i][d]
  bool dd_zero = false;
  std::vector<std::string> notes;
  std::string table_str() const;
};

KoszulHomology koszul_homology_dimensions(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound);

// Closed formula for generators of degree <= 1: with r the rank of the linear part and
// E the kernel of the coefficient map, H_i = Lambda^i(E) (x) A/(generators).
KoszulHomology koszul_linear_oracle(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound);

// Koszul complex of the augmentation O[I_l] -> O over Z with the homotopy h = e_0 ^ -.
struct HomotopyCheck {
  long l = 0;
  bool dd_zero = false;
  bool homotopy_identity = false;
  std::vector<size_t> ranks;  // rank of Lambda^i
};

HomotopyCheck augmentation_homotopy_check(long l);

// ------------------------------------------------------------------ diagonal conormal

struct ConormalDegree {
  int degree = 0;
  size_t conormal_dim = 0;     // (I/I^2)_d
  size_t omega_h_dim = 0;      // (Omega (x) H)_d
  ClassFunction conormal_character;
  ClassFunction omega_h_character;
  bool alpha_bijective = false;
  bool alpha_equivariant = false;
  bool match = false;
};

struct ConormalReport {
  int nvars = 0;
  long l = 0;
  int bound = 0;
  bool relations_ok = false;
  std::vector<ConormalDegree> degrees;
  bool pass() const;
};

// Characters are compared in characteristic zero.
ConormalReport diagonal_conormal(int nvars, long l, int bound);

// ------------------------------------------------------------------ invariant sections

struct InvariantSectionsResult {
  int r = 0;
  long l = 0;
  int bound = 0;
  // each section is a sum of multilinear monomials, one coordinate index per factor
  std::vector<std::map<std::vector<int>, Int>> sections;
  std::vector<std::string> section_strs;
  bool invariant = false;
  bool certified = false;
  int certified_at = 0;
  std::string failing_monomial;  // at the bound when uncertified
};

InvariantSectionsResult invariant_sections_generate(int r, long l, int bound, FieldDescriptor k = {});

// ------------------------------------------------------------------ alpha epimorphisms

enum class AlphaMode { Projective, Affine };

struct AlphaResult {
  AlphaMode mode = AlphaMode::Projective;
  int vars = 0;  // r for projective, number of generators for affine
  long l = 0;
  int bound = 0;
  std::vector<size_t> ideal_dims;     // [d]
  std::vector<size_t> cokernel_dims;  // [d]
  bool compatible = false;            // alpha commutes with the group action on generators
  bool surjective = false;            // cokernel vanishes from some degree through the bound
  int surjective_from = -1;
};

AlphaResult alpha_surjective(AlphaMode mode, int vars, long l, int bound, FieldDescriptor k = {});

}  // namespace tpow
