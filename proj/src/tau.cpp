#include "tpow/tau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tpow {

std::string route_name(TauRoute r) {
  switch (r) {
    case TauRoute::Compositions: return "compositions";
    case TauRoute::Binomial: return "binomial";
    case TauRoute::Cross: return "cross";
    case TauRoute::CyclePsi: return "cycle_psi";
  }
  return "?";
}

TauRoute parse_route(const std::string& s) {
  for (TauRoute r : all_routes())
    if (route_name(r) == s) return r;
  throw DomainError("unknown route '" + s + "' (compositions, binomial, cross, cycle_psi)");
}

const std::vector<TauRoute>& all_routes() {
  static const std::vector<TauRoute> r{TauRoute::Compositions, TauRoute::Binomial, TauRoute::Cross, TauRoute::CyclePsi};
  return r;
}

bool SymbolBlock::operator<(const SymbolBlock& o) const {
  if (size != o.size) return size < o.size;
  if (sign != o.sign) return sign < o.sign;
  return factor < o.factor;
}

bool SymbolBlock::operator==(const SymbolBlock& o) const {
  return size == o.size && sign == o.sign && factor == o.factor;
}

std::string ExternalSymbol::str() const {
  std::ostringstream os;
  os << mult.get_str() << "*Ind[";
  if (blocks.empty()) os << "1";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << " x ";
    os << "(" << hpoly_str(blocks[i].factor) << ")^" << blocks[i].size << (blocks[i].sign ? "_sgn" : "");
  }
  os << "]";
  return os.str();
}

SymbolCombination canonicalize(SymbolCombination s) {
  std::map<std::pair<long, std::vector<SymbolBlock>>, Int> acc;
  for (auto& sym : s) {
    std::vector<SymbolBlock> b;
    bool zero = false;
    for (auto& blk : sym.blocks) {
      if (blk.size == 0) continue;
      if (blk.factor.empty()) zero = true;
      // the sign character of S_1 is trivial
      if (blk.size == 1) blk.sign = false;
      b.push_back(blk);
    }
    if (zero || sym.mult == 0) continue;
    std::sort(b.begin(), b.end());
    acc[{sym.l, b}] += sym.mult;
  }
  SymbolCombination out;
  for (auto& [key, m] : acc)
    if (m != 0) out.push_back(ExternalSymbol{key.first, key.second, m});
  return out;
}

std::string symbols_str(const SymbolCombination& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) os << (i ? " + " : "") << s[i].str();
  return os.str();
}

namespace {

KClassPn psi_hpoly(const HPoly& f, long k, int n) {
  HPoly g;
  for (const auto& [m, c] : f) g[m * k] += c;
  return KClassPn::from_hpoly(n, g);
}

// Young subgroup of the blocks together with its embedding into S_l.
const Embedding& block_embedding(const std::vector<int>& sizes, long l) {
  return cached_embedding(FiniteGroup::young(sizes), FiniteGroup::symmetric(static_cast<int>(l)));
}

// Class function on the block subgroup given per-block values from cycle types.
template <class BlockValue>
std::vector<std::vector<Cyclotomic>> block_values(const GroupPtr& P, size_t nblocks, int width, BlockValue value) {
  std::vector<std::vector<Cyclotomic>> out(P->num_classes());
  for (size_t c = 0; c < P->num_classes(); ++c) {
    auto fc = P->factor_classes(c);
    std::vector<Cyclotomic> acc(width);
    acc[0] = Cyclotomic(1);
    for (size_t b = 0; b < nblocks; ++b) {
      const auto& fg = *P->factors()[b];
      std::vector<Cyclotomic> v = value(b, fg.classes()[fc[b]].cycle_type, perm_sign(fg.element(fg.classes()[fc[b]].rep)));
      std::vector<Cyclotomic> r(width);
      for (int i = 0; i < width; ++i) {
        if (acc[i].is_zero()) continue;
        for (int j = 0; i + j < width; ++j)
          if (!v[j].is_zero()) r[i + j] += acc[i] * v[j];
      }
      acc = std::move(r);
    }
    out[c] = std::move(acc);
  }
  return out;
}

EqKClass from_values(const GroupPtr& P, int n, const std::vector<std::vector<Cyclotomic>>& vals) {
  EqKClass r(P, n);
  for (size_t c = 0; c < vals.size(); ++c)
    for (int j = 0; j <= n; ++j) r.coeff(j).at(c) = vals[c][j];
  return r;
}

std::vector<Cyclotomic> to_cyc(const KClassPn& x) {
  std::vector<Cyclotomic> v;
  for (const auto& c : x.coeffs()) v.emplace_back(c);
  return v;
}

}  // namespace

EqKClass evaluate_symbol(const ExternalSymbol& s, int n) {
  auto S = FiniteGroup::symmetric(static_cast<int>(s.l));
  if (s.blocks.empty()) {
    if (s.l != 0) throw DomainError("symbol without blocks must have l = 0");
    return EqKClass::one(S, n) * Cyclotomic(s.mult);
  }
  std::vector<int> sizes;
  long total = 0;
  for (const auto& b : s.blocks) {
    if (b.size <= 0) throw DomainError("block sizes must be positive");
    sizes.push_back(b.size);
    total += b.size;
  }
  if (total != s.l) throw DomainError("block sizes do not add up to l");
  const Embedding& e = block_embedding(sizes, s.l);
  // psi^k of each block factor, by cycle length
  std::vector<std::map<int, std::vector<Cyclotomic>>> psi(s.blocks.size());
  auto value = [&](size_t b, const Partition& type, int sign) {
    std::vector<Cyclotomic> acc(n + 1);
    acc[0] = Cyclotomic(s.blocks[b].sign ? sign : 1);
    for (int k : type) {
      auto it = psi[b].find(k);
      if (it == psi[b].end()) it = psi[b].emplace(k, to_cyc(psi_hpoly(s.blocks[b].factor, k, n))).first;
      std::vector<Cyclotomic> r(n + 1);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[i + j] += acc[i] * it->second[j];
      acc = std::move(r);
    }
    return acc;
  };
  EqKClass on_blocks = from_values(e.sub, n, block_values(e.sub, s.blocks.size(), n + 1, value));
  return on_blocks.induce(e) * Cyclotomic(s.mult);
}

EqKClass evaluate_symbols(const SymbolCombination& s, long l, int n) {
  EqKClass r(FiniteGroup::symmetric(static_cast<int>(l)), n);
  for (const auto& sym : s) {
    if (sym.l != l) throw DomainError("symbol of a different tensor power");
    r += evaluate_symbol(sym, n);
  }
  return r;
}

SymbolCombination tau_external(const HPoly& x, long l) {
  if (l < 0) throw DomainError("negative tensor power");
  HPoly E = hpoly_positive_part(x), F = hpoly_negative_part(x);
  SymbolCombination out;
  if (l == 0) return {ExternalSymbol{0, {}, 1}};
  for (long i = 0; i <= l; ++i) {
    if ((i > 0 && E.empty()) || (l - i > 0 && F.empty())) continue;
    ExternalSymbol s{l, {}, (l - i) % 2 ? Int(-1) : Int(1)};
    if (i > 0) s.blocks.push_back({static_cast<int>(i), E, false});
    if (l - i > 0) s.blocks.push_back({static_cast<int>(l - i), F, true});
    out.push_back(std::move(s));
  }
  return canonicalize(out);
}

SymbolCombination tau_external_compositions(const HPoly& x, long l) {
  if (l < 0) throw DomainError("negative tensor power");
  HPoly E = hpoly_positive_part(x), F = hpoly_negative_part(x);
  if (l == 0) return {ExternalSymbol{0, {}, 1}};
  SymbolCombination out;
  std::vector<int> parts;
  std::function<void(long, long)> rec = [&](long a, long rest) {
    if (rest == 0) {
      ExternalSymbol s{l, {}, parts.size() % 2 ? Int(-1) : Int(1)};
      if (a > 0) s.blocks.push_back({static_cast<int>(a), E, false});
      for (int b : parts) s.blocks.push_back({b, F, false});
      out.push_back(std::move(s));
      return;
    }
    for (int b = 1; b <= rest; ++b) {
      parts.push_back(b);
      rec(a, rest - b);
      parts.pop_back();
    }
  };
  for (long a = 0; a <= l; ++a) {
    if (a > 0 && E.empty()) continue;
    if (l - a > 0 && F.empty()) continue;
    rec(a, l - a);
  }
  return canonicalize(out);
}

EqKClass cross_product(const EqKClass& a, const EqKClass& b) {
  const auto& A = *a.group();
  const auto& B = *b.group();
  if (A.kind() != GroupKind::Symmetric || B.kind() != GroupKind::Symmetric)
    throw DomainError("cross product needs classes over symmetric groups");
  if (a.n() != b.n()) throw DomainError("cross product over different bases");
  int i = A.param(), j = B.param();
  const Embedding& e = block_embedding({i, j}, i + j);
  return outer_product({a, b}, e.sub).induce(e);
}

namespace {

using Series = std::vector<EqKClass>;

Series series_mul(const Series& a, const Series& b, long l) {
  Series r;
  for (long k = 0; k <= l; ++k) {
    EqKClass acc(FiniteGroup::symmetric(static_cast<int>(k)), a[0].n());
    for (long i = 0; i <= k; ++i) acc += cross_product(a[i], b[k - i]);
    r.push_back(std::move(acc));
  }
  return r;
}

Series series_inverse(const Series& s, long l) {
  // s_0 = 1, so t_k = -sum_{j=1..k} s_j x t_{k-j}
  Series t{s[0]};
  for (long k = 1; k <= l; ++k) {
    EqKClass acc(FiniteGroup::symmetric(static_cast<int>(k)), s[0].n());
    for (long j = 1; j <= k; ++j) acc -= cross_product(s[j], t[k - j]);
    t.push_back(std::move(acc));
  }
  return t;
}

Series line_series(long m, long l, int n) {
  Series s;
  for (long k = 0; k <= l; ++k)
    s.push_back(EqKClass::from_base(FiniteGroup::symmetric(static_cast<int>(k)), KClassPn::h_power(n, m * k)));
  return s;
}

Series unit_series(long l, int n) {
  Series s;
  for (long k = 0; k <= l; ++k) {
    auto S = FiniteGroup::symmetric(static_cast<int>(k));
    s.push_back(k == 0 ? EqKClass::one(S, n) : EqKClass(S, n));
  }
  return s;
}

Series genuine_series(const HPoly& E, long l, int n) {
  Series s = unit_series(l, n);
  for (const auto& [m, c] : E)
    for (Int k = 0; k < c; ++k) s = series_mul(s, line_series(m, l, n), l);
  return s;
}

EqKClass tau_cycle_psi(const HPoly& x, long l, int n) {
  auto S = FiniteGroup::symmetric(static_cast<int>(l));
  std::map<int, KClassPn> psi;
  EqKClass r(S, n);
  for (size_t c = 0; c < S->num_classes(); ++c) {
    KClassPn v = KClassPn::constant(n, 1);
    for (int k : S->classes()[c].cycle_type) {
      auto it = psi.find(k);
      if (it == psi.end()) it = psi.emplace(k, psi_hpoly(x, k, n)).first;
      v *= it->second;
    }
    for (int j = 0; j <= n; ++j) r.coeff(j).at(c) = Cyclotomic(v.coeffs()[j]);
  }
  return r;
}

}  // namespace

EqKClass tau_internal(const HPoly& x, long l, int n, TauRoute route) {
  if (l < 0) throw DomainError("negative tensor power");
  switch (route) {
    case TauRoute::Compositions: return evaluate_symbols(tau_external_compositions(x, l), l, n);
    case TauRoute::Binomial: return evaluate_symbols(tau_external(x, l), l, n);
    case TauRoute::Cross: {
      Series pos = genuine_series(hpoly_positive_part(x), l, n);
      Series neg = series_inverse(genuine_series(hpoly_negative_part(x), l, n), l);
      return series_mul(pos, neg, l)[l];
    }
    case TauRoute::CyclePsi: return tau_cycle_psi(x, l, n);
  }
  throw InvariantViolation("unhandled route");
}

EqKClass kunneth_pushforward(const SymbolCombination& s, long l, int n) {
  auto S = FiniteGroup::symmetric(static_cast<int>(l));
  EqKClass total(S, 0);
  for (const auto& sym : s) {
    if (sym.l != l) throw DomainError("symbol of a different tensor power");
    if (sym.blocks.empty()) {
      total += EqKClass::one(S, 0) * Cyclotomic(sym.mult);
      continue;
    }
    std::vector<int> sizes;
    std::vector<Int> dims;
    for (const auto& b : sym.blocks) {
      for (const auto& [m, c] : b.factor) {
        if (m < 0) throw DomainError("push-forward needs acyclic twists h^m with m >= 0");
        if (c < 0) throw DomainError("block factor must be genuine");
      }
      Rat d = KClassPn::from_hpoly(n, b.factor).pushforward();
      if (d.get_den() != 1) throw InvariantViolation("Euler characteristic is not an integer");
      dims.push_back(d.get_num());
      sizes.push_back(b.size);
    }
    const Embedding& e = block_embedding(sizes, l);
    auto value = [&](size_t b, const Partition& type, int sign) {
      Int v = 1;
      for (size_t k = 0; k < type.size(); ++k) v *= dims[b];
      if (sym.blocks[b].sign) v *= sign;
      return std::vector<Cyclotomic>{Cyclotomic(v)};
    };
    EqKClass on_blocks = from_values(e.sub, 0, block_values(e.sub, sym.blocks.size(), 1, value));
    total += on_blocks.induce(e) * Cyclotomic(sym.mult);
  }
  return total;
}

GroupPtr cyclic_in_symmetric(long l) {
  if (l < 1) throw DomainError("cyclic subgroup needs l >= 1");
  return FiniteGroup::cyclic(static_cast<int>(l));
}

EqKClass restrict_eqk(const EqKClass& x, const GroupPtr& sub) {
  const auto& S = *x.group();
  if (S.kind() != GroupKind::Symmetric) throw DomainError("restriction source must be a symmetric group");
  bool young = sub->kind() == GroupKind::Product && sub->degree() == S.degree();
  if (young)
    for (const auto& f : sub->factors()) young = young && f->kind() == GroupKind::Symmetric;
  bool cyclic = sub->kind() == GroupKind::Cyclic && sub->degree() == S.degree() &&
                static_cast<int>(sub->order()) == S.degree();
  bool same = sub.get() == x.group().get();
  if (!young && !cyclic && !same) throw DomainError("unsupported subgroup " + sub->name());
  return x.restrict(cached_embedding(sub, x.group()));
}

EqKClass zero_section_pushforward(const EqKClass& w, int n) {
  if (w.n() != 0) throw DomainError("zero-section push-forward starts from the point");
  KClassPn koszul = (KClassPn::constant(n, 1) - KClassPn::h_power(n, -1)).pow(n);
  return EqKClass::tensor(w.coeff(0), koszul);
}

EqKClass tensor_power_trace_oracle(const HPoly& x, long l, int n) {
  std::vector<long> lines;
  for (const auto& [m, c] : x) {
    if (c < 0) throw DomainError("trace oracle needs a genuine class");
    for (Int k = 0; k < c; ++k) lines.push_back(m);
  }
  auto S = FiniteGroup::symmetric(static_cast<int>(l));
  size_t d = lines.size();
  size_t total = 1;
  for (long k = 0; k < l; ++k) total *= d;
  EqKClass r(S, n);
  std::vector<size_t> idx(l), img(l);
  for (size_t c = 0; c < S->num_classes(); ++c) {
    const Perm& sigma = S->element(S->classes()[c].rep);
    KClassPn trace(n);
    // sigma sends the basis tensor e_{i_1} x ... x e_{i_l} to the one with entry i_k at slot sigma(k)
    for (size_t code = 0; code < total; ++code) {
      size_t t = code;
      for (long k = 0; k < l; ++k) {
        idx[k] = t % d;
        t /= d;
      }
      for (long k = 0; k < l; ++k) img[sigma[k]] = idx[k];
      if (img != idx) continue;
      long m = 0;
      for (long k = 0; k < l; ++k) m += lines[idx[k]];
      trace += KClassPn::h_power(n, m);
    }
    for (int j = 0; j <= n; ++j) r.coeff(j).at(c) = Cyclotomic(trace.coeffs()[j]);
  }
  return r;
}

ClassFunction permutation_module_character(long l) {
  return permutation_character(FiniteGroup::symmetric(static_cast<int>(l)));
}

ClassFunction reduced_permutation_character(long l) {
  auto S = FiniteGroup::symmetric(static_cast<int>(l));
  return permutation_character(S) - trivial_character(S);
}

}  // namespace tpow
