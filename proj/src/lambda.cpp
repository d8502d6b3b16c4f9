#include "tpow/lambda.hpp"

#include <algorithm>
#include <sstream>

namespace tpow {

namespace {

void require_line_character(const ClassFunction& chi) {
  if (chi.dimension() != Cyclotomic(1) || chi * chi.conj() != trivial_character(chi.group()))
    throw DomainError("line monomial needs a one-dimensional character");
}

EqKClass theta_line(const LineMonomial& m, int n, long l) {
  EqKClass line = line_class(m, n);
  EqKClass sum(m.chi.group(), n), power = EqKClass::one(m.chi.group(), n);
  for (long i = 0; i < l; ++i) {
    sum += power;
    power *= line;
  }
  return sum;
}

}  // namespace

LineSumClass::LineSumClass(GroupPtr g, int n) : group_(std::move(g)), n_(n) {
  if (n < 0) throw DomainError("negative projective dimension");
}

LineSumClass LineSumClass::from_hpoly(const GroupPtr& g, int n, const HPoly& p) {
  LineSumClass r(g, n);
  for (const auto& [m, c] : p) {
    if (!c.fits_slong_p()) throw DomainError("multiplicity too large");
    r.add(trivial_character(g), m, c.get_si());
  }
  return r;
}

void LineSumClass::add(const ClassFunction& chi, long m, long mult) {
  if (chi.group().get() != group_.get()) throw DomainError("line character lives on another group");
  require_line_character(chi);
  if (mult == 0) return;
  for (auto& [mono, k] : terms_)
    if (mono.m == m && mono.chi == chi) {
      k += mult;
      if (k == 0) {
        auto it = std::find_if(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 0; });
        terms_.erase(it);
      }
      return;
    }
  terms_.push_back({LineMonomial{chi, m}, mult});
}

bool LineSumClass::is_genuine() const {
  for (const auto& t : terms_)
    if (t.second < 0) return false;
  return true;
}

long LineSumClass::rank() const {
  long r = 0;
  for (const auto& t : terms_) r += t.second;
  return r;
}

EqKClass LineSumClass::to_eqk() const {
  EqKClass r(group_, n_);
  for (const auto& [mono, k] : terms_) r += line_class(mono, n_) * Cyclotomic(k);
  return r;
}

LineSumClass LineSumClass::operator+(const LineSumClass& o) const {
  if (o.group_.get() != group_.get() || o.n_ != n_) throw DomainError("line sums over different bases");
  LineSumClass r = *this;
  for (const auto& [mono, k] : o.terms_) r.add(mono.chi, mono.m, k);
  return r;
}

EqKClass line_class(const LineMonomial& m, int n) { return EqKClass::tensor(m.chi, KClassPn::h_power(n, m.m)); }

EqKClass lambda_minus_one(const LineSumClass& x) {
  EqKClass r = EqKClass::one(x.group(), x.n());
  for (const auto& [mono, k] : x.terms()) {
    if (k < 0) throw DomainError("non-terminating expansion: 1 - line has no inverse");
    r *= (EqKClass::one(x.group(), x.n()) - line_class(mono, x.n())).pow(k);
  }
  return r;
}

EqKClass bott_theta(const LineSumClass& x, long l) {
  if (l < 1) throw DomainError("Bott element needs l >= 1");
  EqKClass r = EqKClass::one(x.group(), x.n());
  for (const auto& [mono, k] : x.terms()) {
    EqKClass t = theta_line(mono, x.n(), l);
    r *= k >= 0 ? t.pow(k) : t.inverse(l).pow(-k);
  }
  return r;
}

EqKClass bott_theta_inverse(const LineSumClass& x, long l) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  EqKClass theta = bott_theta(x, l);
  EqKClass inv = theta.inverse(l);
  if (inv * theta != EqKClass::one(x.group(), x.n())) throw InvariantViolation("Bott inverse check failed");
  return inv;
}

EqKClass lambda_minus_one_twisted(const LineSumClass& x, const ClassFunction& V) {
  if (V.group().get() != x.group().get()) throw DomainError("representation lives on another group");
  Cyclotomic d = V.dimension();
  if (!d.is_rational() || d.rational().get_den() != 1 || d.rational() < 0)
    throw DomainError("twisting representation must have a non-negative integral dimension");
  long dim = d.rational().get_num().get_si();
  auto lam = exterior_powers(V, dim);
  EqKClass r = EqKClass::one(x.group(), x.n());
  for (const auto& [mono, k] : x.terms()) {
    if (k < 0) throw DomainError("non-terminating expansion: negative multiplicity");
    EqKClass factor(x.group(), x.n());
    ClassFunction chi_power = trivial_character(x.group());
    for (long i = 0; i <= dim; ++i) {
      ClassFunction c = chi_power * lam[i];
      if (i % 2) c = -c;
      factor += EqKClass::tensor(c, KClassPn::h_power(x.n(), mono.m * i));
      chi_power *= mono.chi;
    }
    r *= factor.pow(k);
  }
  return r;
}

std::vector<EqKClass> eqk_exterior_powers(const EqKClass& x, long kmax) {
  std::vector<EqKClass> lam{EqKClass::one(x.group(), x.n())};
  std::vector<EqKClass> psis{EqKClass(x.group(), x.n())};
  for (long i = 1; i <= kmax; ++i) psis.push_back(x.psi(i));
  for (long k = 1; k <= kmax; ++k) {
    EqKClass acc(x.group(), x.n());
    for (long i = 1; i <= k; ++i) {
      EqKClass term = psis[i] * lam[k - i];
      if (i % 2) acc += term;
      else acc -= term;
    }
    lam.push_back(acc * Cyclotomic(Rat(1, k)));
  }
  return lam;
}

namespace {

long finite_rank(const EqKClass& x) {
  Cyclotomic d = x.coeff(0).dimension();
  if (!d.is_rational() || d.rational().get_den() != 1 || d.rational() < 0)
    throw DomainError("rank is not a non-negative integer; lambda-degree is not finite");
  return d.rational().get_num().get_si();
}

}  // namespace

EqKClass eqk_lambda_minus_one(const EqKClass& x) {
  long r = finite_rank(x);
  auto lam = eqk_exterior_powers(x, r + 1);
  if (!lam[r + 1].is_zero()) throw DomainError("non-terminating expansion: lambda^" + std::to_string(r + 1) + " is nonzero");
  EqKClass s(x.group(), x.n());
  for (long i = 0; i <= r; ++i) s += i % 2 ? -lam[i] : lam[i];
  return s;
}

EqKClass bott_theta_symmetric(const EqKClass& x, long l) {
  long r = finite_rank(x);
  auto lam = eqk_exterior_powers(x, r + 1);
  if (!lam[r + 1].is_zero()) throw DomainError("class is not of finite lambda-degree");
  if (r == 0) return EqKClass::one(x.group(), x.n());
  int nv = static_cast<int>(r);
  Polynomial prod = Polynomial::constant(nv, 1);
  for (int i = 0; i < nv; ++i) {
    Polynomial geo = Polynomial::constant(nv, 0);
    for (long j = 0; j < l; ++j) geo = geo + Polynomial::variable(nv, i).pow(static_cast<int>(j));
    prod = prod * geo;
  }
  Polynomial q = symmetric_reduce(prod);
  EqKClass out(x.group(), x.n());
  for (const auto& [exps, c] : q.terms) {
    EqKClass term = EqKClass::one(x.group(), x.n());
    for (int i = 0; i < nv; ++i)
      if (exps[i]) term *= lam[i + 1].pow(exps[i]);
    out += term * Cyclotomic(c);
  }
  return out;
}

// ---------------------------------------------------------------- AugmentedTruncated

AugmentedTruncated::AugmentedTruncated(long p, const Rat& rank) : p_(p), rank_(rank) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (!localized_at_l_check(rank, p)) throw DomainError("rank part is not in Z[1/p]");
}

AugmentedTruncated AugmentedTruncated::symbol(long p, const std::string& name) {
  AugmentedTruncated r(p, 0);
  r.ideal_[name] = 1;
  return r;
}

AugmentedTruncated AugmentedTruncated::rank_one(long p, const std::string& name) {
  AugmentedTruncated r = symbol(p, name);
  r.rank_ = 1;
  return r;
}

void AugmentedTruncated::check(const AugmentedTruncated& o) const {
  if (p_ != o.p_) throw DomainError("elements localized at different primes");
}

AugmentedTruncated AugmentedTruncated::operator+(const AugmentedTruncated& o) const {
  check(o);
  AugmentedTruncated r = *this;
  r.rank_ += o.rank_;
  for (const auto& [s, c] : o.ideal_) {
    r.ideal_[s] += c;
    if (r.ideal_[s] == 0) r.ideal_.erase(s);
  }
  return r;
}

AugmentedTruncated AugmentedTruncated::operator*(const Rat& c) const {
  if (!localized_at_l_check(c, p_)) throw DomainError("scalar is not in Z[1/p]");
  AugmentedTruncated r(p_, rank_ * c);
  if (c != 0)
    for (const auto& [s, v] : ideal_) r.ideal_[s] = v * c;
  return r;
}

AugmentedTruncated AugmentedTruncated::operator-(const AugmentedTruncated& o) const { return *this + o * Rat(-1); }

AugmentedTruncated AugmentedTruncated::operator*(const AugmentedTruncated& o) const {
  check(o);
  // (a + x)(b + y) = ab + ay + bx, since xy lies in the square of the ideal
  AugmentedTruncated r = o * rank_ + *this * o.rank_;
  r.rank_ = rank_ * o.rank_;
  return r;
}

AugmentedTruncated AugmentedTruncated::inverse() const {
  LocalizedAtL a(rank_, p_);
  if (!a.is_unit()) throw DomainError("rank part is not a unit of Z[1/p]");
  Rat ainv = 1 / rank_;
  AugmentedTruncated r = *this * (-ainv * ainv);
  r.rank_ = ainv;
  return r;
}

bool AugmentedTruncated::operator==(const AugmentedTruncated& o) const {
  return p_ == o.p_ && rank_ == o.rank_ && ideal_ == o.ideal_;
}

std::string AugmentedTruncated::str() const {
  std::ostringstream os;
  os << to_string(rank_);
  for (const auto& [s, c] : ideal_) os << (c < 0 ? " - " : " + ") << to_string(c < 0 ? Rat(-c) : c) << "*[" << s << "]";
  return os.str();
}

AugmentedTruncated bott_theta_rank_one(const AugmentedTruncated& x, long l) {
  if (x.rank() != 1) throw DomainError("line rule needs a rank-one element");
  AugmentedTruncated sum(x.prime(), 0), power(x.prime(), 1);
  for (long i = 0; i < l; ++i) {
    sum = sum + power;
    power = power * x;
  }
  return sum;
}

}  // namespace tpow
