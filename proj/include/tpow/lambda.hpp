#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpow/kclass.hpp"

namespace tpow {

// One line monomial chi (x) h^m with chi a one-dimensional character.
struct LineMonomial {
  ClassFunction chi;
  long m = 0;
};

// Integer combination of line monomials in R(G) (x) K_0(P^n).
class LineSumClass {
 public:
  LineSumClass(GroupPtr g, int n);
  // Lines with trivial G-structure, one per term of the polynomial.
  static LineSumClass from_hpoly(const GroupPtr& g, int n, const HPoly& p);

  void add(const ClassFunction& chi, long m, long mult);
  const GroupPtr& group() const { return group_; }
  int n() const { return n_; }
  const std::vector<std::pair<LineMonomial, long>>& terms() const { return terms_; }
  bool is_genuine() const;
  long rank() const;
  EqKClass to_eqk() const;
  LineSumClass operator+(const LineSumClass& o) const;

 private:
  GroupPtr group_;
  int n_;
  std::vector<std::pair<LineMonomial, long>> terms_;
};

EqKClass line_class(const LineMonomial& m, int n);

EqKClass lambda_minus_one(const LineSumClass& x);
EqKClass bott_theta(const LineSumClass& x, long l);
EqKClass bott_theta_inverse(const LineSumClass& x, long l);

// lambda_{-1}(x (x) V) for a genuine line sum x and a genuine representation V.
EqKClass lambda_minus_one_twisted(const LineSumClass& x, const ClassFunction& V);

// lambda^0..lambda^kmax of an element of R(G) (x) K_0(P^n) through Newton's identity.
std::vector<EqKClass> eqk_exterior_powers(const EqKClass& x, long kmax);
// sum (-1)^i lambda^i(x) for x of finite lambda-degree (its rank at the identity);
// the next exterior power is required to vanish.
EqKClass eqk_lambda_minus_one(const EqKClass& x);
// Bott element of a genuine class through symmetric reduction in rank-many line variables.
EqKClass bott_theta_symmetric(const EqKClass& x, long l);

// Polynomial with integer coefficients in n variables; exponent vector -> coefficient.
struct Polynomial {
  int nvars = 0;
  std::map<std::vector<int>, Int> terms;

  static Polynomial constant(int nvars, const Int& c);
  static Polynomial variable(int nvars, int i);
  // k-th elementary symmetric polynomial
  static Polynomial elementary(int nvars, int k);

  bool is_zero() const { return terms.empty(); }
  bool is_symmetric() const;
  int degree() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(int e) const;
  bool operator==(const Polynomial& o) const { return nvars == o.nvars && terms == o.terms; }
  std::string str(const std::string& var = "x") const;
};

// Rewrites a symmetric polynomial in x_1..x_n as a polynomial in e_1..e_n
// (variable i of the result stands for e_{i+1}).
Polynomial symmetric_reduce(const Polynomial& p);
// Substitutes e_i -> e_i(x_1..x_n).
Polynomial expand_elementary(const Polynomial& q);

// prod (1 - x_i^p) = prod (1 - x_i) * prod (1 + x_i + ... + x_i^{p-1}) in n variables,
// checked both as polynomials and after symmetric reduction.
bool cartier_identity_check(int n, long p);

// Z[1/p] + (augmentation ideal), the ideal squaring to zero; ideal part is a
// rational combination of named symbols.
class AugmentedTruncated {
 public:
  AugmentedTruncated(long p, const Rat& rank);
  static AugmentedTruncated symbol(long p, const std::string& name);
  // Rank-one element 1 + (name); for example a line bundle Omega = 1 + (Omega - 1).
  static AugmentedTruncated rank_one(long p, const std::string& name);

  long prime() const { return p_; }
  const Rat& rank() const { return rank_; }
  const std::map<std::string, Rat>& ideal() const { return ideal_; }
  AugmentedTruncated inverse() const;
  AugmentedTruncated operator+(const AugmentedTruncated& o) const;
  AugmentedTruncated operator-(const AugmentedTruncated& o) const;
  AugmentedTruncated operator*(const AugmentedTruncated& o) const;
  AugmentedTruncated operator*(const Rat& c) const;
  bool operator==(const AugmentedTruncated& o) const;
  std::string str() const;

 private:
  void check(const AugmentedTruncated& o) const;
  long p_;
  Rat rank_;
  std::map<std::string, Rat> ideal_;
};

// theta^l of a rank-one element: 1 + x + ... + x^{l-1}.
AugmentedTruncated bott_theta_rank_one(const AugmentedTruncated& x, long l);

}  // namespace tpow
