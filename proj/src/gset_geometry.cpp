#include "tpow/gset_geometry.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace tpow {

Cyclotomic EquivariantBundle::fiber_trace(size_t x, size_t h) const {
  const auto& G = *X.group;
  size_t o = orbit_of[x];
  size_t a = transporter[x];
  size_t s = G.mul(G.inv(a), G.mul(h, a));
  size_t idx = stabilizers[o]->find(G.element(s));
  if (idx == FiniteGroup::npos) throw InvariantViolation("element does not fix the point it acts on");
  return value_at_element(fibers[o], idx);
}

Cyclotomic EquivariantBundle::total_dimension() const {
  Cyclotomic d;
  for (size_t x = 0; x < X.size; ++x) d += fibers[orbit_of[x]].dimension();
  return d;
}

GroupPtr subgroup_with_elements(const GroupPtr& G, std::vector<size_t> elems) {
  static std::mutex mu;
  static std::map<const FiniteGroup*, std::pair<GroupPtr, std::vector<GroupPtr>>> cache;
  std::vector<GroupPtr> subs;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(G.get());
    if (it == cache.end()) it = cache.emplace(G.get(), std::make_pair(G, subgroups(G))).first;
    subs = it->second.second;
  }
  std::sort(elems.begin(), elems.end());
  for (const auto& S : subs) {
    if (S->order() != elems.size()) continue;
    std::vector<size_t> idx;
    for (const auto& p : S->elements()) idx.push_back(G->index_of(p));
    std::sort(idx.begin(), idx.end());
    if (idx == elems) return S;
  }
  throw InvariantViolation("element set is not a subgroup of " + G->name());
}

EquivariantBundle make_bundle_from(const FiniteGSet& X, const std::vector<ClassFunction>& fibers) {
  EquivariantBundle E;
  E.X = X;
  auto orbs = X.orbits();
  if (fibers.size() != orbs.size()) throw DomainError("need one fiber character per orbit");
  E.orbit_of.assign(X.size, 0);
  E.transporter.assign(X.size, FiniteGroup::npos);
  for (size_t o = 0; o < orbs.size(); ++o) {
    size_t r = orbs[o][0];
    E.reps.push_back(r);
    GroupPtr S = subgroup_with_elements(X.group, X.stabilizer(r));
    if (fibers[o].group().get() != S.get())
      throw DomainError("fiber character of orbit " + std::to_string(o) + " is not on the stabilizer");
    E.stabilizers.push_back(S);
    for (size_t g = 0; g < X.group->order(); ++g) {
      size_t x = X.apply(g, r);
      E.orbit_of[x] = o;
      if (E.transporter[x] == FiniteGroup::npos) E.transporter[x] = g;
    }
  }
  E.fibers = fibers;
  return E;
}

EquivariantBundle trivial_line_bundle(const FiniteGSet& X) {
  return make_bundle(X, [](size_t, const GroupPtr& S) { return trivial_character(S); });
}

ClassFunction sections_pushforward(const EquivariantBundle& E, const GroupPtr& H) {
  const auto& G = *E.X.group;
  ClassFunction r = ClassFunction::zero(H);
  for (size_t c = 0; c < H->num_classes(); ++c) {
    size_t g = G.index_of(H->element(H->classes()[c].rep));
    Cyclotomic s;
    for (size_t x = 0; x < E.X.size; ++x)
      if (E.X.apply(g, x) == x) s += E.fiber_trace(x, g);
    r.at(c) = s;
  }
  return r;
}

namespace {

Cyclotomic cpow(const Cyclotomic& v, long e) {
  Cyclotomic r(1);
  for (long k = 0; k < e; ++k) r *= v;
  return r;
}

}  // namespace

TensorPowerCharacters tensor_power_characters(const EquivariantBundle& E, const PowerDecomposition& d,
                                              const GroupPtr& H, bool enumerate) {
  const auto& G = *E.X.group;
  if (d.group.get() != E.X.group.get() || d.X.size != E.X.size) throw DomainError("decomposition of another G-set");
  long l = d.l;
  TensorPowerCharacters out;
  out.group = FiniteGroup::product({FiniteGroup::cyclic(static_cast<int>(l)), H});
  const auto& P = *out.group;
  size_t nc = P.num_classes();
  out.direct = ClassFunction::zero(out.group);
  out.diagonal = ClassFunction::zero(out.group);
  out.free_part = ClassFunction::zero(out.group);
  out.y = ClassFunction::zero(H);
  out.tau_of_pushforward = ClassFunction::zero(out.group);
  ClassFunction push = sections_pushforward(E, H);

  // y on H from the representative set
  size_t xs = d.principal ? d.X.size : 1;
  for (size_t hc = 0; hc < H->num_classes(); ++hc) {
    size_t g = G.index_of(H->element(H->classes()[hc].rep));
    Cyclotomic s;
    for (size_t m = 0; m < d.M.size(); ++m)
      for (size_t x = 0; x < xs; ++x) {
        auto img = d.act_model(0, g, 0, m, x);
        if (img[1] != m || img[2] != (d.principal ? x : 0)) continue;
        Cyclotomic p(1);
        for (size_t pt : d.phi(0, m, x)) p *= E.fiber_trace(pt, g);
        s += p;
      }
    out.y.at(hc) = s;
  }

  size_t total = d.power_size();
  std::vector<size_t> y(l);
  for (size_t c = 0; c < nc; ++c) {
    auto fc = P.factor_classes(c);
    size_t i = fc[0], hc = fc[1];
    size_t hidx = H->classes()[hc].rep;
    size_t g = G.index_of(H->element(hidx));
    size_t gl = G.power(g, l);
    Cyclotomic diag;
    for (size_t x = 0; x < E.X.size; ++x) {
      if (E.X.apply(g, x) != x) continue;
      diag += i == 0 ? cpow(E.fiber_trace(x, g), l) : E.fiber_trace(x, gl);
    }
    out.diagonal.at(c) = diag;
    out.free_part.at(c) = i == 0 ? out.y.at(hc) * Cyclotomic(l) : Cyclotomic(0);
    out.tau_of_pushforward.at(c) = i == 0 ? cpow(push.at(hc), l) : value_at_element(push, H->power(hidx, l));
    if (!enumerate) continue;
    Cyclotomic s;
    for (size_t code = 0; code < total; ++code) {
      size_t t = code;
      for (long k = 0; k < l; ++k) {
        y[k] = t % E.X.size;
        t /= E.X.size;
      }
      bool fixed = true;
      for (long k = 0; k < l && fixed; ++k) fixed = E.X.apply(g, y[(k + i) % l]) == y[k];
      if (!fixed) continue;
      if (i == 0) {
        Cyclotomic p(1);
        for (long k = 0; k < l; ++k) p *= E.fiber_trace(y[k], g);
        s += p;
      } else {
        s += E.fiber_trace(y[0], gl);
      }
    }
    out.direct.at(c) = s;
  }
  return out;
}

ClassFunction tensor_power_bundle(const EquivariantBundle& E, const PowerDecomposition& d, const GroupPtr& H) {
  bool enumerate = d.power_size() <= 100000;
  auto t = tensor_power_characters(E, d, H, enumerate);
  ClassFunction via_decomposition = t.diagonal + t.free_part;
  if (enumerate && via_decomposition != t.direct)
    throw InvariantViolation("tensor power character disagrees with direct enumeration");
  return via_decomposition;
}

namespace {

EquivariantBundle choose_bundle(const FiniteGSet& X, bool principal, int fiber_choice) {
  if (fiber_choice == 0) return trivial_line_bundle(X);
  return make_bundle(X, [&](size_t o, const GroupPtr& S) {
    if (!principal) {
      auto table = character_table(S);
      for (size_t a = 1; a < table->size(); ++a)
        if (table->irreducibles[a].dimension() == Cyclotomic(1)) return table->irreducibles[a];
    }
    return trivial_character(S) * Cyclotomic(static_cast<long>(o + 2));
  });
}

}  // namespace

GBundleCongruence gbundle_congruence_check(const GroupPtr& G, const GroupPtr& coset_sub, int fiber_choice, long l,
                                const GroupPtr& H) {
  PowerDecomposition d = decompose_power_gset(G, l, coset_sub);
  EquivariantBundle E = choose_bundle(d.X, d.principal, fiber_choice);
  GBundleCongruence res;
  res.enumerated = d.power_size() <= 100000;
  auto t = tensor_power_characters(E, d, H, res.enumerated);
  ClassFunction via_decomposition = t.diagonal + t.free_part;
  if (res.enumerated && via_decomposition != t.direct)
    throw InvariantViolation("decomposition route disagrees with direct enumeration of X^l");
  if (via_decomposition != t.tau_of_pushforward)
    throw InvariantViolation("tensor power of the push-forward disagrees with the sections of the power bundle");
  res.left = t.tau_of_pushforward;
  res.right = t.diagonal;
  ClassFunction gen = outer_product(regular_character(FiniteGroup::cyclic(static_cast<int>(l))), trivial_character(H), t.group);
  auto m = ideal_membership(res.left - res.right, {gen});
  res.pass = m.member;
  if (m.member) res.witness = m.multipliers[0];
  std::ostringstream os;
  os << G->name() << (d.principal ? " principal" : " over " + coset_sub->name()) << ", l=" << l << ", H=" << H->name()
     << ", |M|=" << d.M.size() << ", fiber " << (fiber_choice ? "nontrivial" : "trivial");
  res.detail = os.str();
  return res;
}

bool induction_adams_check(const GroupPtr& G, const GroupPtr& sub, const ClassFunction& phi, long l) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  if (G->order() % static_cast<size_t>(l) == 0) throw DomainError(std::to_string(l) + " divides the order of " + G->name());
  const Embedding& e = cached_embedding(sub, G);
  return induce(phi, e).psi(l) == induce(phi.psi(l), e);
}

std::string K1Element::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < exponents.size(); ++j) os << (j ? ", " : "") << exponents[j].get_str();
  os << ")";
  return os.str();
}

K1Element k1_tensor_power(long l, long beta_exponent) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  auto S = FiniteGroup::symmetric(static_cast<int>(l));
  auto C = FiniteGroup::cyclic(static_cast<int>(l));
  const Embedding& toS = cached_embedding(C, S);
  auto table = character_table(C);
  // chi^j: value zeta^j at the generator
  std::vector<size_t> by_power(l);
  for (long j = 0; j < l; ++j) {
    Cyclotomic z = Cyclotomic::zeta_power(l, j);
    bool found = false;
    for (size_t a = 0; a < table->size(); ++a)
      if (table->irreducibles[a].at(C->class_of(1)) == z) {
        by_power[j] = a;
        found = true;
      }
    if (!found) throw InvariantViolation("missing character of the cyclic group");
  }
  K1Element out{l, std::vector<Int>(l, 0)};
  ClassFunction reg = regular_character(C);
  for (long i = 0; i <= l; ++i) {
    const Embedding& young = cached_embedding(FiniteGroup::young({static_cast<int>(i), static_cast<int>(l - i)}), S);
    auto Y = young.sub;
    ClassFunction block = outer_product(trivial_character(Y->factors()[0]), sign_character(Y->factors()[1]), Y);
    ClassFunction res = restrict(induce(block, young), toS);
    if (i >= 1 && i <= l - 1) {
      // C_l permutes the cosets freely: a free module of rank binomial(l,i)/l
      Rat rank(binomial(l, i), Int(l));
      rank.canonicalize();
      if (res != reg * Cyclotomic(rank)) throw InvariantViolation("induced module is not free over C_l");
    }
    auto mult = table->decompose(res);
    Int sign = (l - i) % 2 ? -1 : 1;
    for (long j = 0; j < l; ++j) out.exponents[j] += sign * Int(i) * Int(beta_exponent) * mult[by_power[j]];
  }
  return out;
}

Rat binomial_identity_sum(long l) {
  if (l < 2) throw DomainError("l must be at least 2");
  Rat s = 0;
  for (long i = 1; i <= l - 1; ++i) {
    Rat t(binomial(l, i) * i, Int(l));
    t.canonicalize();
    s += (l - i) % 2 ? -t : t;
  }
  return s;
}

bool binomial_identity_check(long l) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  return binomial_identity_sum(l) == -1;
}

}  // namespace tpow
