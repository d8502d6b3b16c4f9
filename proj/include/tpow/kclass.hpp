#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpow/characters.hpp"
#include "tpow/exact.hpp"
#include "tpow/groups.hpp"

namespace tpow {

// Integer combination of powers of the hyperplane class: exponent -> coefficient.
using HPoly = std::map<long, Int>;

// Parses expressions such as "h^2 - 3*h^-1 + 2", "2h", "-h^-2", "0".
HPoly hpoly_parse(const std::string& text);
std::string hpoly_str(const HPoly& p);
HPoly hpoly_add(const HPoly& a, const HPoly& b);
HPoly hpoly_neg(const HPoly& a);
HPoly hpoly_mul(const HPoly& a, const HPoly& b);
HPoly hpoly_constant(const Int& c);
// Terms with positive coefficients, and the negated terms with negative coefficients.
HPoly hpoly_positive_part(const HPoly& a);
HPoly hpoly_negative_part(const HPoly& a);
Int hpoly_rank(const HPoly& a);

// Element of K_0(P^n) in the basis u^0..u^n, u = h - 1, u^{n+1} = 0.
class KClassPn {
 public:
  explicit KClassPn(int n = 0);
  KClassPn(int n, std::vector<Rat> coeffs);

  static KClassPn constant(int n, const Rat& c);
  static KClassPn h_power(int n, long m);
  static KClassPn u_power(int n, int j);
  static KClassPn from_hpoly(int n, const HPoly& p);

  int n() const { return n_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& rank() const { return coeffs_[0]; }
  bool is_zero() const;
  bool is_integral() const;

  KClassPn psi(long k) const;
  // Inverse when the rank is nonzero.
  KClassPn inverse() const;
  KClassPn pow(long e) const;
  // Euler characteristic push-forward to the point: h^m -> binomial(n+m, n).
  Rat pushforward() const;

  KClassPn& operator+=(const KClassPn& o);
  KClassPn& operator-=(const KClassPn& o);
  KClassPn& operator*=(const KClassPn& o);
  KClassPn& operator*=(const Rat& c);
  KClassPn operator-() const;
  friend KClassPn operator+(KClassPn a, const KClassPn& b) { return a += b; }
  friend KClassPn operator-(KClassPn a, const KClassPn& b) { return a -= b; }
  friend KClassPn operator*(KClassPn a, const KClassPn& b) { return a *= b; }
  friend KClassPn operator*(KClassPn a, const Rat& c) { return a *= c; }
  friend bool operator==(const KClassPn& a, const KClassPn& b);
  friend bool operator!=(const KClassPn& a, const KClassPn& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_same(const KClassPn& o) const;
  int n_;
  std::vector<Rat> coeffs_;
};

Rat pushforward_projective(const KClassPn& x);

// Element of R(G) (x) K_0(P^n): one class function per power of u.
class EqKClass {
 public:
  EqKClass() = default;
  EqKClass(GroupPtr g, int n);
  EqKClass(GroupPtr g, int n, std::vector<ClassFunction> coeffs);

  static EqKClass one(const GroupPtr& g, int n);
  // chi (x) x
  static EqKClass tensor(const ClassFunction& chi, const KClassPn& x);
  // Trivial G-structure on a class of K_0(P^n).
  static EqKClass from_base(const GroupPtr& g, const KClassPn& x);
  static EqKClass from_character(const ClassFunction& chi, int n);

  const GroupPtr& group() const { return group_; }
  int n() const { return n_; }
  const std::vector<ClassFunction>& coeffs() const { return coeffs_; }
  const ClassFunction& coeff(int j) const { return coeffs_[j]; }
  ClassFunction& coeff(int j) { return coeffs_[j]; }
  bool is_zero() const;
  // The K_0(P^n) value at a conjugacy class; values must be rational.
  KClassPn value_at(size_t cls) const;
  ClassFunction rank() const { return coeffs_[0]; }

  EqKClass psi(long k) const;
  // Unit-plus-nilpotent inverse; the rank part must be a unit of R(G), or of R(G)[1/l] when l > 0.
  EqKClass inverse(long l = 0) const;
  EqKClass pow(long e) const;
  ClassFunction pushforward() const;
  // Multiplicities of irreducibles (rows) per power of u (columns).
  std::vector<std::vector<Rat>> matrix() const;
  // Multiplicity of the trivial character in each u-coefficient.
  KClassPn trivial_projection() const;

  EqKClass induce(const Embedding& e) const;
  EqKClass restrict(const Embedding& e) const;

  EqKClass& operator+=(const EqKClass& o);
  EqKClass& operator-=(const EqKClass& o);
  EqKClass& operator*=(const EqKClass& o);
  EqKClass& operator*=(const Cyclotomic& c);
  EqKClass operator-() const;
  friend EqKClass operator+(EqKClass a, const EqKClass& b) { return a += b; }
  friend EqKClass operator-(EqKClass a, const EqKClass& b) { return a -= b; }
  friend EqKClass operator*(EqKClass a, const EqKClass& b) { return a *= b; }
  friend EqKClass operator*(EqKClass a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const EqKClass& a, const EqKClass& b);
  friend bool operator!=(const EqKClass& a, const EqKClass& b) { return !(a == b); }

  // Class-by-class rendering of the K_0(P^n) values.
  std::string str() const;

 private:
  void check_same(const EqKClass& o) const;
  GroupPtr group_;
  int n_ = 0;
  std::vector<ClassFunction> coeffs_;
};

// Outer tensor product over a product group, multiplying the K_0(P^n) parts.
EqKClass outer_product(const std::vector<EqKClass>& parts, const GroupPtr& product);

EqKClass adams_psi_k(const EqKClass& x, long k);

// Membership of x in the ideal generated by the given classes, coefficient ring R(G) (x) K_0(P^n)
// (or its localization at l when l > 0). Multipliers satisfy x = sum gens[i] * multipliers[i].
struct EqIdealMembership {
  bool member = false;
  std::vector<EqKClass> multipliers;
};
EqIdealMembership eq_ideal_membership(const EqKClass& x, const std::vector<EqKClass>& gens, long l = 0);

}  // namespace tpow
