#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tpow {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an internal consistency check fails; always an implementation bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised when an operation is called outside its domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generalized binomial coefficient; n may be negative.
Int binomial(long n, unsigned long k);
Int factorial(unsigned long n);
bool is_prime(long n);
long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_floor(long a, long m);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Int>& cyclotomic_polynomial(long n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Int& v);  // NOLINT
  Cyclotomic(const Rat& v);  // NOLINT

  static Cyclotomic zeta_power(long n, long k);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  Rat rational() const;
  bool is_integral() const;

  Cyclotomic lifted(long n) const;
  Cyclotomic galois(long a) const;
  Cyclotomic conj() const { return galois(-1); }
  Rat norm() const;
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

  friend Cyclotomic cyclotomic_normalize(const std::vector<Rat>& coeffs, long n);

 private:
  long order_ = 1;
  std::vector<Rat> coeffs_;
};

// Reduces a polynomial in zeta_n (any length, lowest degree first) to canonical form.
Cyclotomic cyclotomic_normalize(const std::vector<Rat>& coeffs, long n);

// True iff the reduced denominator of q is a power of l.
bool localized_at_l_check(const Rat& q, long l);

// Rational number whose denominator is a power of a fixed prime.
class LocalizedAtL {
 public:
  LocalizedAtL(const Rat& v, long l);
  const Rat& value() const { return value_; }
  long prime() const { return prime_; }
  bool is_unit() const;
  LocalizedAtL inverse() const;
  LocalizedAtL operator+(const LocalizedAtL& o) const;
  LocalizedAtL operator-(const LocalizedAtL& o) const;
  LocalizedAtL operator*(const LocalizedAtL& o) const;
  bool operator==(const LocalizedAtL& o) const { return prime_ == o.prime_ && value_ == o.value_; }

 private:
  Rat value_;
  long prime_;
};

}  // namespace tpow
