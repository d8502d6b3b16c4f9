#include "tpow/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tpow {

Int binomial(long n, unsigned long k) {
  Int r;
  Int nn = n;
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long euler_phi(long n) {
  long r = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

namespace {

using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
  size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InvariantViolation("cyclotomic division degree");
  IntPoly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw InvariantViolation("cyclotomic division remainder");
  return q;
}

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly x_power_minus_one(long d) {
  IntPoly r(d + 1, 0);
  r[0] = -1;
  r[d] = 1;
  return r;
}

IntPoly compute_cyclotomic(long n) {
  IntPoly num{1}, den{1};
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) num = poly_mul(num, x_power_minus_one(d));
    if (mu == -1) den = poly_mul(den, x_power_minus_one(d));
  }
  IntPoly q = poly_div_exact(num, den);
  if (q.back() != 1) throw InvariantViolation("cyclotomic polynomial not monic");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, compute_cyclotomic(n)).first->second;
}

namespace {
std::vector<Rat> raw_lift(const Cyclotomic& a, long n);
}  // namespace

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rat(0)} {}
Cyclotomic::Cyclotomic(long v) : order_(1), coeffs_{Rat(v)} {}
Cyclotomic::Cyclotomic(const Int& v) : order_(1), coeffs_{Rat(v)} {}
Cyclotomic::Cyclotomic(const Rat& v) : order_(1), coeffs_{v} { coeffs_[0].canonicalize(); }

Cyclotomic cyclotomic_normalize(const std::vector<Rat>& coeffs, long n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  std::vector<Rat> folded(n, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) folded[i % n] += coeffs[i];
  const auto& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;
  for (size_t i = folded.size(); i-- > deg;) {
    if (folded[i] == 0) continue;
    Rat c = folded[i];
    for (size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= c * Rat(phi[j]);
  }
  folded.resize(deg);
  Cyclotomic r;
  bool rational = true;
  for (size_t i = 1; i < folded.size(); ++i)
    if (folded[i] != 0) rational = false;
  if (rational) {
    r.order_ = 1;
    r.coeffs_ = {folded.empty() ? Rat(0) : folded[0]};
    for (auto& c : r.coeffs_) c.canonicalize();
    return r;
  }
  r.order_ = n;
  r.coeffs_ = std::move(folded);
  return r;
}

Cyclotomic Cyclotomic::zeta_power(long n, long k) {
  std::vector<Rat> c(n, 0);
  c[mod_floor(k, n)] = 1;
  return cyclotomic_normalize(c, n);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rat Cyclotomic::rational() const {
  if (order_ != 1) throw DomainError("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

bool Cyclotomic::is_integral() const {
  // power-basis coordinates of an algebraic integer are integers
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::lifted(long n) const {
  if (n % order_ != 0) throw DomainError("lift target not a multiple of the order");
  if (n == order_) return *this;
  return cyclotomic_normalize(raw_lift(*this, n), n);
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (order_ == 1) return *this;
  if (gcd_long(mod_floor(a, order_), order_) != 1) throw DomainError("galois exponent not a unit");
  std::vector<Rat> c(order_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[mod_floor(static_cast<long>(i) * a, order_)] += coeffs_[i];
  return cyclotomic_normalize(c, order_);
}

Rat Cyclotomic::norm() const {
  if (order_ == 1) return coeffs_[0];
  Cyclotomic p(1);
  for (long a = 1; a < order_; ++a)
    if (gcd_long(a, order_) == 1) p *= galois(a);
  return p.rational();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (order_ == 1) return Cyclotomic(Rat(1) / coeffs_[0]);
  Cyclotomic p(1);
  for (long a = 2; a < order_; ++a)
    if (gcd_long(a, order_) == 1) p *= galois(a);
  Rat nrm = (p * *this).rational();
  return p * Cyclotomic(Rat(1) / nrm);
}

namespace {

// Coefficients of a as an unreduced polynomial in zeta_n, n a multiple of its order.
std::vector<Rat> raw_lift(const Cyclotomic& a, long n) {
  long step = n / a.order();
  std::vector<Rat> c(n, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[(i * step) % n] += a.coeffs()[i];
  return c;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    if (order_ != 1) *this = cyclotomic_normalize(coeffs_, order_);
    return *this;
  }
  long n = lcm_long(order_, o.order_);
  std::vector<Rat> a = raw_lift(*this, n), b = raw_lift(o, n);
  for (long i = 0; i < n; ++i) a[i] += b[i];
  return *this = cyclotomic_normalize(a, n);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order_ == 1 && o.order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this = cyclotomic_normalize(coeffs_, order_);
  }
  if (order_ == 1) {
    Rat s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this = cyclotomic_normalize(coeffs_, order_);
  }
  long n = lcm_long(order_, o.order_);
  std::vector<Rat> a = raw_lift(*this, n), b = raw_lift(o, n);
  std::vector<Rat> prod(2 * n, 0);
  for (long i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < n; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  return *this = cyclotomic_normalize(prod, n);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return (a - b).is_zero();
}

std::string Cyclotomic::str() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "E(" << order_ << ")";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

bool localized_at_l_check(const Rat& q, long l) {
  if (!is_prime(l)) throw DomainError("localization requires a prime");
  Int d = q.get_den();
  while (d % l == 0) d /= l;
  return d == 1;
}

LocalizedAtL::LocalizedAtL(const Rat& v, long l) : value_(v), prime_(l) {
  value_.canonicalize();
  if (!localized_at_l_check(value_, l))
    throw DomainError("denominator of " + value_.get_str() + " is not a power of " + std::to_string(l));
}

bool LocalizedAtL::is_unit() const {
  if (value_ == 0) return false;
  Int n = abs(value_.get_num());
  while (n % prime_ == 0) n /= prime_;
  return n == 1;
}

LocalizedAtL LocalizedAtL::inverse() const {
  if (!is_unit()) throw DomainError(value_.get_str() + " is not a unit away from " + std::to_string(prime_));
  return LocalizedAtL(Rat(1) / value_, prime_);
}

LocalizedAtL LocalizedAtL::operator+(const LocalizedAtL& o) const {
  if (o.prime_ != prime_) throw DomainError("mismatched localization");
  return LocalizedAtL(value_ + o.value_, prime_);
}

LocalizedAtL LocalizedAtL::operator-(const LocalizedAtL& o) const {
  if (o.prime_ != prime_) throw DomainError("mismatched localization");
  return LocalizedAtL(value_ - o.value_, prime_);
}

LocalizedAtL LocalizedAtL::operator*(const LocalizedAtL& o) const {
  if (o.prime_ != prime_) throw DomainError("mismatched localization");
  return LocalizedAtL(value_ * o.value_, prime_);
}

}  // namespace tpow
