#include <algorithm>
#include <sstream>

#include "tpow/lambda.hpp"

namespace tpow {

Polynomial Polynomial::constant(int nvars, const Int& c) {
  Polynomial p;
  p.nvars = nvars;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
  Polynomial p;
  p.nvars = nvars;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms[e] = 1;
  return p;
}

Polynomial Polynomial::elementary(int nvars, int k) {
  Polynomial p;
  p.nvars = nvars;
  if (k < 0 || k > nvars) return p;
  std::vector<int> mask(nvars, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do p.terms[mask] = 1;
  while (std::prev_permutation(mask.begin(), mask.end()));
  return p;
}

bool Polynomial::is_symmetric() const {
  if (nvars < 2) return true;
  auto permuted = [&](const std::vector<int>& perm) {
    Polynomial q;
    q.nvars = nvars;
    for (const auto& [e, c] : terms) {
      std::vector<int> f(nvars);
      for (int i = 0; i < nvars; ++i) f[perm[i]] = e[i];
      q.terms[f] = c;
    }
    return q;
  };
  std::vector<int> swap(nvars), cycle(nvars);
  for (int i = 0; i < nvars; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % nvars;
  }
  std::swap(swap[0], swap[1]);
  return permuted(swap) == *this && permuted(cycle) == *this;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars != o.nvars) throw DomainError("polynomials in different numbers of variables");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms) {
    Int& v = r.terms[e];
    v += c;
    if (v == 0) r.terms.erase(e);
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * constant(nvars, -1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars != o.nvars) throw DomainError("polynomials in different numbers of variables");
  Polynomial r;
  r.nvars = nvars;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
      r.terms[e] += c1 * c2;
    }
  for (auto it = r.terms.begin(); it != r.terms.end();) it = it->second == 0 ? r.terms.erase(it) : std::next(it);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial r = constant(nvars, 1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Int c = it->second;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool constant_term = std::all_of(it->first.begin(), it->first.end(), [](int v) { return v == 0; });
    if (c != 1 || constant_term) os << c.get_str();
    bool need_star = c != 1;
    for (int i = 0; i < nvars; ++i) {
      if (!it->first[i]) continue;
      os << (need_star ? "*" : "") << var << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial symmetric_reduce(const Polynomial& p) {
  if (!p.is_symmetric()) throw DomainError("polynomial is not symmetric");
  int n = p.nvars;
  std::vector<Polynomial> e;
  for (int k = 1; k <= n; ++k) e.push_back(Polynomial::elementary(n, k));
  Polynomial rest = p;
  Polynomial out;
  out.nvars = n;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms.rbegin();
    // leading exponent of a symmetric polynomial is non-increasing
    std::vector<int> a(n);
    Polynomial sub = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      a[i] = lead[i] - (i + 1 < n ? lead[i + 1] : 0);
      if (a[i] < 0) throw InvariantViolation("leading exponent is not a partition");
      if (a[i]) sub = sub * e[i].pow(a[i]);
    }
    out.terms[a] += c;
    rest = rest - sub;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  if (expand_elementary(out) != p) throw InvariantViolation("symmetric reduction does not reproduce the input");
  return out;
}

Polynomial expand_elementary(const Polynomial& q) {
  int n = q.nvars;
  Polynomial r = Polynomial::constant(n, 0);
  for (const auto& [a, c] : q.terms) {
    Polynomial t = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (a[i]) t = t * Polynomial::elementary(n, i + 1).pow(a[i]);
    r = r + t;
  }
  return r;
}

bool cartier_identity_check(int n, long p) {
  if (n < 1) throw DomainError("need at least one variable");
  if (!is_prime(p)) throw DomainError("p must be prime");
  Polynomial one = Polynomial::constant(n, 1);
  Polynomial lhs = one, rhs = one;
  for (int i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    lhs = lhs * (one - x.pow(static_cast<int>(p)));
    Polynomial geo = Polynomial::constant(n, 0);
    for (long j = 0; j < p; ++j) geo = geo + x.pow(static_cast<int>(j));
    rhs = rhs * (one - x) * geo;
  }
  return lhs == rhs && symmetric_reduce(lhs) == symmetric_reduce(rhs);
}

}  // namespace tpow
