#include "tpow/kclass.hpp"

#include <cctype>
#include <sstream>

#include "tpow/linalg.hpp"

namespace tpow {

// ---------------------------------------------------------------- HPoly

namespace {

void hpoly_trim(HPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

}  // namespace

HPoly hpoly_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty class expression");
  HPoly out;
  size_t i = 0;
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!out.empty() || i != 0) {
      throw DomainError("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    std::string digits;
    read_int(digits);
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    long exponent = 0;
    bool has_h = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw DomainError("'*' without a coefficient in '" + text + "'");
      ++i;
      if (i >= s.size() || s[i] != 'h') throw DomainError("expected 'h' after '*' in '" + text + "'");
    }
    if (i < s.size() && s[i] == 'h') {
      has_h = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        std::string e;
        read_int(e);
        if (e.empty()) throw DomainError("missing exponent in '" + text + "'");
        exponent = esign * std::stol(e);
      }
    }
    if (digits.empty() && !has_h) throw DomainError("malformed term at position " + std::to_string(i) + " in '" + text + "'");
    out[exponent] += sign * coeff;
  }
  hpoly_trim(out);
  return out;
}

std::string hpoly_str(const HPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    Int c = it->second;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (it->first == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "h";
    if (it->first != 1) os << "^" << it->first;
  }
  return os.str();
}

HPoly hpoly_add(const HPoly& a, const HPoly& b) {
  HPoly r = a;
  for (const auto& [m, c] : b) r[m] += c;
  hpoly_trim(r);
  return r;
}

HPoly hpoly_neg(const HPoly& a) {
  HPoly r;
  for (const auto& [m, c] : a) r[m] = -c;
  return r;
}

HPoly hpoly_mul(const HPoly& a, const HPoly& b) {
  HPoly r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) r[m1 + m2] += c1 * c2;
  hpoly_trim(r);
  return r;
}

HPoly hpoly_constant(const Int& c) {
  HPoly r;
  if (c != 0) r[0] = c;
  return r;
}

HPoly hpoly_positive_part(const HPoly& a) {
  HPoly r;
  for (const auto& [m, c] : a)
    if (c > 0) r[m] = c;
  return r;
}

HPoly hpoly_negative_part(const HPoly& a) {
  HPoly r;
  for (const auto& [m, c] : a)
    if (c < 0) r[m] = -c;
  return r;
}

Int hpoly_rank(const HPoly& a) {
  Int r = 0;
  for (const auto& [m, c] : a) r += c;
  return r;
}

// ---------------------------------------------------------------- KClassPn

KClassPn::KClassPn(int n) : n_(n), coeffs_(n + 1) {
  if (n < 0) throw DomainError("negative projective dimension");
}

KClassPn::KClassPn(int n, std::vector<Rat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 0) throw DomainError("negative projective dimension");
  if (coeffs_.size() > static_cast<size_t>(n + 1)) {
    for (size_t j = n + 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) throw DomainError("u-power beyond the dimension");
  }
  coeffs_.resize(n + 1);
}

KClassPn KClassPn::constant(int n, const Rat& c) {
  KClassPn r(n);
  r.coeffs_[0] = c;
  return r;
}

KClassPn KClassPn::h_power(int n, long m) {
  KClassPn r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = Rat(binomial(m, k));
  return r;
}

KClassPn KClassPn::u_power(int n, int j) {
  KClassPn r(n);
  if (j < 0) throw DomainError("negative power of u");
  if (j <= n) r.coeffs_[j] = 1;
  return r;
}

KClassPn KClassPn::from_hpoly(int n, const HPoly& p) {
  KClassPn r(n);
  for (const auto& [m, c] : p) r += h_power(n, m) * Rat(c);
  return r;
}

bool KClassPn::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool KClassPn::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

void KClassPn::check_same(const KClassPn& o) const {
  if (n_ != o.n_) throw DomainError("classes on projective spaces of different dimension");
}

KClassPn& KClassPn::operator+=(const KClassPn& o) {
  check_same(o);
  for (int j = 0; j <= n_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

KClassPn& KClassPn::operator-=(const KClassPn& o) {
  check_same(o);
  for (int j = 0; j <= n_; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

KClassPn& KClassPn::operator*=(const KClassPn& o) {
  check_same(o);
  std::vector<Rat> r(n_ + 1);
  for (int a = 0; a <= n_; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; a + b <= n_; ++b) r[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(r);
  return *this;
}

KClassPn& KClassPn::operator*=(const Rat& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

KClassPn KClassPn::operator-() const {
  KClassPn r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

bool operator==(const KClassPn& a, const KClassPn& b) { return a.n_ == b.n_ && a.coeffs_ == b.coeffs_; }

KClassPn KClassPn::psi(long k) const {
  KClassPn image_u = h_power(n_, k) - constant(n_, 1);
  KClassPn r(n_);
  for (int j = n_; j >= 0; --j) {
    r *= image_u;
    r.coeffs_[0] += coeffs_[j];
  }
  return r;
}

KClassPn KClassPn::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("class of rank zero is not invertible");
  Rat r0inv = 1 / coeffs_[0];
  KClassPn nil = *this * r0inv;
  nil.coeffs_[0] = 0;
  KClassPn sum = constant(n_, 1), term = constant(n_, 1);
  for (int k = 1; k <= n_; ++k) {
    term *= -nil;
    sum += term;
  }
  return sum * r0inv;
}

KClassPn KClassPn::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  KClassPn r = constant(n_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat KClassPn::pushforward() const {
  Rat s = 0;
  for (int j = 0; j <= n_; ++j) s += coeffs_[j] * Rat(binomial(n_, j));
  return s;
}

std::string KClassPn::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= n_; ++j) {
    Rat c = coeffs_[j];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (j == 0) {
      os << to_string(c);
      continue;
    }
    if (c != 1) os << to_string(c) << "*";
    os << "u";
    if (j > 1) os << "^" << j;
  }
  return first ? "0" : os.str();
}

Rat pushforward_projective(const KClassPn& x) { return x.pushforward(); }

// ---------------------------------------------------------------- EqKClass

namespace {

using UPoly = std::vector<Cyclotomic>;

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

EqKClass::EqKClass(GroupPtr g, int n) : group_(std::move(g)), n_(n) {
  if (n < 0) throw DomainError("negative projective dimension");
  coeffs_.assign(n + 1, ClassFunction::zero(group_));
}

EqKClass::EqKClass(GroupPtr g, int n, std::vector<ClassFunction> coeffs)
    : group_(std::move(g)), n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<size_t>(n + 1)) throw DomainError("wrong number of u-coefficients");
  for (const auto& c : coeffs_)
    if (c.group().get() != group_.get()) throw DomainError("coefficient lives on another group");
}

EqKClass EqKClass::one(const GroupPtr& g, int n) { return from_base(g, KClassPn::constant(n, 1)); }

EqKClass EqKClass::tensor(const ClassFunction& chi, const KClassPn& x) {
  EqKClass r(chi.group(), x.n());
  for (int j = 0; j <= x.n(); ++j)
    if (x.coeffs()[j] != 0) r.coeffs_[j] = chi * Cyclotomic(x.coeffs()[j]);
  return r;
}

EqKClass EqKClass::from_base(const GroupPtr& g, const KClassPn& x) { return tensor(trivial_character(g), x); }

EqKClass EqKClass::from_character(const ClassFunction& chi, int n) { return tensor(chi, KClassPn::constant(n, 1)); }

bool EqKClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

KClassPn EqKClass::value_at(size_t cls) const {
  std::vector<Rat> v;
  for (const auto& c : coeffs_) {
    if (!c.at(cls).is_rational()) throw DomainError("value at class " + std::to_string(cls) + " is not rational");
    v.push_back(c.at(cls).rational());
  }
  return KClassPn(n_, std::move(v));
}

void EqKClass::check_same(const EqKClass& o) const {
  if (group_.get() != o.group_.get()) throw DomainError("classes over different groups");
  if (n_ != o.n_) throw DomainError("classes over projective spaces of different dimension");
}

EqKClass& EqKClass::operator+=(const EqKClass& o) {
  check_same(o);
  for (int j = 0; j <= n_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

EqKClass& EqKClass::operator-=(const EqKClass& o) {
  check_same(o);
  for (int j = 0; j <= n_; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

EqKClass& EqKClass::operator*=(const EqKClass& o) {
  check_same(o);
  std::vector<ClassFunction> r(n_ + 1, ClassFunction::zero(group_));
  for (int a = 0; a <= n_; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (int b = 0; a + b <= n_; ++b)
      if (!o.coeffs_[b].is_zero()) r[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(r);
  return *this;
}

EqKClass& EqKClass::operator*=(const Cyclotomic& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

EqKClass EqKClass::operator-() const {
  EqKClass r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

bool operator==(const EqKClass& a, const EqKClass& b) {
  if (a.group_.get() != b.group_.get() || a.n_ != b.n_) return false;
  for (int j = 0; j <= a.n_; ++j)
    if (a.coeffs_[j] != b.coeffs_[j]) return false;
  return true;
}

EqKClass EqKClass::psi(long k) const {
  // psi^k(chi (x) u^j) = psi^k(chi) (x) (h^k - 1)^j
  KClassPn image_u = KClassPn::h_power(n_, k) - KClassPn::constant(n_, 1);
  std::vector<KClassPn> powers{KClassPn::constant(n_, 1)};
  for (int j = 1; j <= n_; ++j) powers.push_back(powers.back() * image_u);
  EqKClass r(group_, n_);
  for (int j = 0; j <= n_; ++j) {
    if (coeffs_[j].is_zero()) continue;
    ClassFunction pc = coeffs_[j].psi(k);
    for (int t = 0; t <= n_; ++t)
      if (powers[j].coeffs()[t] != 0) r.coeffs_[t] += pc * Cyclotomic(powers[j].coeffs()[t]);
  }
  return r;
}

EqKClass adams_psi_k(const EqKClass& x, long k) { return x.psi(k); }

EqKClass EqKClass::inverse(long l) const {
  const ClassFunction& a = coeffs_[0];
  std::vector<Cyclotomic> inv;
  for (const auto& v : a.values()) {
    if (v.is_zero()) throw DomainError("rank part vanishes on a conjugacy class; not invertible");
    inv.push_back(v.inverse());
  }
  ClassFunction ainv(group_, std::move(inv));
  auto coords = character_table(group_)->coordinates(ainv);
  for (const auto& q : coords)
    if (l > 0 ? !localized_at_l_check(q, l) : q.get_den() != 1)
      throw DomainError(l > 0 ? "rank part is not a unit after inverting " + std::to_string(l)
                              : "rank part is not a unit of the representation ring");
  EqKClass nil = *this * EqKClass::from_character(ainv, n_);
  nil.coeffs_[0] = ClassFunction::zero(group_);
  nil = -nil;
  EqKClass sum = one(group_, n_), term = one(group_, n_);
  for (int k = 1; k <= n_; ++k) {
    term *= nil;
    sum += term;
  }
  return sum * EqKClass::from_character(ainv, n_);
}

EqKClass EqKClass::pow(long e) const {
  if (e < 0) throw DomainError("negative power; use inverse()");
  EqKClass r = one(group_, n_), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

ClassFunction EqKClass::pushforward() const {
  ClassFunction r = ClassFunction::zero(group_);
  for (int j = 0; j <= n_; ++j) r += coeffs_[j] * Cyclotomic(binomial(n_, j));
  return r;
}

std::vector<std::vector<Rat>> EqKClass::matrix() const {
  auto table = character_table(group_);
  std::vector<std::vector<Rat>> m(table->size(), std::vector<Rat>(n_ + 1));
  for (int j = 0; j <= n_; ++j) {
    auto c = table->coordinates(coeffs_[j]);
    for (size_t a = 0; a < c.size(); ++a) m[a][j] = c[a];
  }
  return m;
}

KClassPn EqKClass::trivial_projection() const {
  std::vector<Rat> v;
  ClassFunction triv = trivial_character(group_);
  for (const auto& c : coeffs_) {
    Cyclotomic ip = inner_product(c, triv);
    if (!ip.is_rational()) throw InvariantViolation("trivial multiplicity is irrational");
    v.push_back(ip.rational());
  }
  return KClassPn(n_, std::move(v));
}

EqKClass EqKClass::induce(const Embedding& e) const {
  std::vector<ClassFunction> c;
  for (const auto& v : coeffs_) c.push_back(tpow::induce(v, e));
  return EqKClass(e.ambient, n_, std::move(c));
}

EqKClass EqKClass::restrict(const Embedding& e) const {
  std::vector<ClassFunction> c;
  for (const auto& v : coeffs_) c.push_back(tpow::restrict(v, e));
  return EqKClass(e.sub, n_, std::move(c));
}

std::string EqKClass::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t c = 0; c < group_->num_classes(); ++c) {
    if (c) os << ", ";
    bool rational = true;
    for (const auto& v : coeffs_) rational = rational && v.at(c).is_rational();
    if (rational) {
      os << value_at(c).str();
    } else {
      os << "(";
      for (int j = 0; j <= n_; ++j) os << (j ? ", " : "") << coeffs_[j].at(c).str();
      os << ")";
    }
  }
  os << "]";
  return os.str();
}

EqKClass outer_product(const std::vector<EqKClass>& parts, const GroupPtr& product) {
  if (product->kind() != GroupKind::Product || product->factors().size() != parts.size())
    throw DomainError("outer product needs a product group with matching factors");
  if (parts.empty()) throw DomainError("outer product of no factors");
  int n = parts[0].n();
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].n() != n) throw DomainError("outer product over different projective spaces");
    if (parts[k].group()->order() != product->factors()[k]->order() ||
        parts[k].group()->num_classes() != product->factors()[k]->num_classes())
      throw DomainError("outer product factor mismatch");
  }
  EqKClass r(product, n);
  for (size_t c = 0; c < product->num_classes(); ++c) {
    auto fc = product->factor_classes(c);
    UPoly acc(n + 1);
    acc[0] = Cyclotomic(1);
    for (size_t k = 0; k < parts.size(); ++k) {
      UPoly v;
      for (int j = 0; j <= n; ++j) v.push_back(parts[k].coeff(j).at(fc[k]));
      acc = upoly_mul(acc, v);
    }
    for (int j = 0; j <= n; ++j) r.coeff(j).at(c) = acc[j];
  }
  return r;
}

EqIdealMembership eq_ideal_membership(const EqKClass& x, const std::vector<EqKClass>& gens, long l) {
  auto table = character_table(x.group());
  size_t s = table->size();
  int n = x.n();
  size_t dim = s * (n + 1);
  auto flatten = [&](const EqKClass& y) {
    auto m = y.matrix();
    std::vector<Rat> v(dim);
    for (int j = 0; j <= n; ++j)
      for (size_t a = 0; a < s; ++a) v[j * s + a] = m[a][j];
    return v;
  };
  EqIdealMembership res;
  std::vector<Rat> b = flatten(x);
  for (const auto& q : b)
    if (l > 0 ? !localized_at_l_check(q, l) : q.get_den() != 1) return res;
  std::vector<EqKClass> basis;
  for (int j = 0; j <= n; ++j)
    for (size_t a = 0; a < s; ++a) basis.push_back(EqKClass::tensor(table->irreducibles[a], KClassPn::u_power(n, j)));
  MatZ A(dim, std::vector<Int>(gens.size() * dim));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t t = 0; t < dim; ++t) {
      auto col = flatten(gens[i] * basis[t]);
      for (size_t r = 0; r < dim; ++r) {
        if (col[r].get_den() != 1) throw DomainError("ideal generator is not integral");
        A[r][i * dim + t] = col[r].get_num();
      }
    }
  auto w = solve_integral(A, b, l);
  if (!w) return res;
  res.member = true;
  EqKClass check(x.group(), n);
  for (size_t i = 0; i < gens.size(); ++i) {
    EqKClass m(x.group(), n);
    for (size_t t = 0; t < dim; ++t)
      if ((*w)[i * dim + t] != 0) m += basis[t] * Cyclotomic((*w)[i * dim + t]);
    check += gens[i] * m;
    res.multipliers.push_back(std::move(m));
  }
  if (check != x) throw InvariantViolation("ideal witness does not reproduce the element");
  return res;
}

}  // namespace tpow
