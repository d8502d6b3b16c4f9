#include <algorithm>
#include <set>

#include "tpow/groups.hpp"

namespace tpow {

void FiniteGSet::validate() const {
  const auto& G = *group;
  if (act.size() != G.order()) throw InvariantViolation("action table has wrong number of rows");
  for (size_t x = 0; x < size; ++x)
    if (act[G.identity()][x] != x) throw InvariantViolation("identity does not act trivially");
  for (size_t a = 0; a < G.order(); ++a)
    for (size_t b = 0; b < G.order(); ++b) {
      size_t ab = G.mul(a, b);
      for (size_t x = 0; x < size; ++x)
        if (act[ab][x] != act[a][act[b][x]]) throw InvariantViolation("action is not compatible with products");
    }
}

std::vector<std::vector<size_t>> FiniteGSet::orbits() const {
  std::vector<std::vector<size_t>> out;
  std::vector<bool> seen(size, false);
  for (size_t x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::set<size_t> orb;
    for (size_t g = 0; g < group->order(); ++g) orb.insert(act[g][x]);
    std::vector<size_t> o{x};
    for (size_t y : orb) {
      seen[y] = true;
      if (y != x) o.push_back(y);
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<size_t> FiniteGSet::stabilizer(size_t x) const {
  std::vector<size_t> s;
  for (size_t g = 0; g < group->order(); ++g)
    if (act[g][x] == x) s.push_back(g);
  return s;
}

FiniteGSet FiniteGSet::restrict_to(const Embedding& e) const {
  if (e.ambient.get() != group.get()) throw DomainError("restriction along an embedding into another group");
  FiniteGSet r;
  r.group = e.sub;
  r.size = size;
  r.labels = labels;
  for (size_t h = 0; h < e.sub->order(); ++h) r.act.push_back(act[e.element_map[h]]);
  return r;
}

FiniteGSet principal_gset(const GroupPtr& G) {
  FiniteGSet X;
  X.group = G;
  X.size = G->order();
  X.act.assign(G->order(), std::vector<size_t>(X.size));
  for (size_t g = 0; g < G->order(); ++g)
    for (size_t x = 0; x < X.size; ++x) X.act[g][x] = G->mul(x, G->inv(g));
  for (size_t x = 0; x < X.size; ++x) X.labels.push_back("g" + std::to_string(x));
  return X;
}

FiniteGSet coset_gset(const GroupPtr& G, const GroupPtr& sub) {
  std::vector<size_t> sub_idx;
  for (const auto& p : sub->elements()) sub_idx.push_back(G->index_of(p));
  std::vector<size_t> coset_of(G->order(), FiniteGroup::npos);
  std::vector<size_t> reps;
  for (size_t x = 0; x < G->order(); ++x) {
    if (coset_of[x] != FiniteGroup::npos) continue;
    for (size_t s : sub_idx) coset_of[G->mul(x, s)] = reps.size();
    reps.push_back(x);
  }
  FiniteGSet X;
  X.group = G;
  X.size = reps.size();
  X.act.assign(G->order(), std::vector<size_t>(X.size));
  for (size_t g = 0; g < G->order(); ++g)
    for (size_t c = 0; c < X.size; ++c) X.act[g][c] = coset_of[G->mul(g, reps[c])];
  for (size_t c = 0; c < X.size; ++c) X.labels.push_back("g" + std::to_string(reps[c]) + "H");
  return X;
}

std::vector<size_t> PowerDecomposition::phi(size_t j, size_t m, size_t x) const {
  std::vector<size_t> y(l);
  const auto& t = M[m];
  for (long k = 0; k < l; ++k) {
    size_t e = t[(j + k) % l];
    y[k] = principal ? group->mul(x, e) : e;
  }
  return y;
}

std::vector<size_t> PowerDecomposition::act_power(size_t i, size_t g, const std::vector<size_t>& y) const {
  std::vector<size_t> r(l);
  for (long k = 0; k < l; ++k) r[k] = X.apply(g, y[(k + i) % l]);
  return r;
}

std::array<size_t, 3> PowerDecomposition::act_model(size_t i, size_t g, size_t j, size_t m, size_t x) const {
  std::vector<size_t> t(l);
  if (principal) {
    size_t gi = group->inv(g);
    for (long k = 0; k < l; ++k) t[k] = group->mul(group->mul(g, M[m][k]), gi);
  } else {
    for (long k = 0; k < l; ++k) t[k] = X.apply(g, M[m][k]);
  }
  auto it = M_index.find(t);
  if (it == M_index.end()) throw InvariantViolation("representative set is not stable under the group");
  return {(i + j) % l, it->second, principal ? X.apply(g, x) : 0};
}

size_t PowerDecomposition::power_size() const {
  size_t n = 1;
  for (long k = 0; k < l; ++k) n *= X.size;
  return n;
}

size_t PowerDecomposition::model_size() const {
  return static_cast<size_t>(l) * M.size() * (principal ? X.size : 1);
}

namespace {

size_t encode(const std::vector<size_t>& t, size_t base) {
  size_t c = 0;
  for (size_t k = t.size(); k-- > 0;) c = c * base + t[k];
  return c;
}

// Advances a tuple in lexicographic order over positions [from, end); false after the last.
bool next_tuple(std::vector<size_t>& t, size_t from, size_t base) {
  for (size_t k = t.size(); k-- > from;) {
    if (++t[k] < base) return true;
    t[k] = 0;
  }
  return false;
}

}  // namespace

PowerDecomposition decompose_power_gset(const GroupPtr& G, long l, const GroupPtr& coset_sub) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  if (G->order() % static_cast<size_t>(l) == 0)
    throw DomainError(std::to_string(l) + " divides the order of " + G->name());
  PowerDecomposition d;
  d.group = G;
  d.l = l;
  d.principal = coset_sub == nullptr;
  d.X = d.principal ? principal_gset(G) : coset_gset(G, coset_sub);
  size_t base = d.principal ? G->order() : d.X.size;
  size_t total = 1;
  for (long k = 0; k < l; ++k) total *= base;
  std::vector<char> covered(total, 0);

  // C_l acting on tuples: rotation, renormalized so the first entry is 1 in principal mode.
  auto rotate = [&](const std::vector<size_t>& t, size_t i) {
    std::vector<size_t> r(l);
    size_t lead = d.principal ? G->inv(t[i % l]) : 0;
    for (long k = 0; k < l; ++k) r[k] = d.principal ? G->mul(lead, t[(i + k) % l]) : t[(i + k) % l];
    return r;
  };
  auto move = [&](size_t g, const std::vector<size_t>& t) {
    std::vector<size_t> r(l);
    size_t gi = G->inv(g);
    for (long k = 0; k < l; ++k) r[k] = d.principal ? G->mul(G->mul(g, t[k]), gi) : d.X.apply(g, t[k]);
    return r;
  };
  auto trivial = [&](const std::vector<size_t>& t) {
    for (long k = 1; k < l; ++k)
      if (t[k] != t[0]) return false;
    return true;
  };

  std::vector<size_t> t(l, 0);
  size_t from = 0;
  if (d.principal) {
    t[0] = G->identity();
    from = 1;
  }
  do {
    if (d.principal && t[0] != G->identity()) continue;
    if (trivial(t) || covered[encode(t, base)]) continue;
    for (size_t g = 0; g < G->order(); ++g) {
      std::vector<size_t> s = move(g, t);
      if (d.M_index.count(s)) continue;
      for (long i = 0; i < l; ++i) {
        size_t code = encode(rotate(s, i), base);
        if (covered[code]) throw InvariantViolation("cyclic orbits of representatives overlap");
        covered[code] = 1;
      }
      d.M_index.emplace(s, d.M.size());
      d.M.push_back(s);
    }
  } while (next_tuple(t, from, base));
  verify_power_decomposition(d);
  return d;
}

void verify_power_decomposition(const PowerDecomposition& d) {
  const auto& G = *d.group;
  size_t base = d.X.size;
  size_t total = d.power_size();
  std::vector<char> hit(total, 0);
  for (size_t x = 0; x < base; ++x) hit[encode(std::vector<size_t>(d.l, x), base)] = 1;
  size_t xs = d.principal ? d.X.size : 1;
  for (long j = 0; j < d.l; ++j)
    for (size_t m = 0; m < d.M.size(); ++m)
      for (size_t x = 0; x < xs; ++x) {
        size_t code = encode(d.phi(j, m, x), base);
        if (hit[code]) throw InvariantViolation("decomposition map is not injective");
        hit[code] = 1;
      }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw InvariantViolation("decomposition map is not surjective");
  for (long i = 0; i < d.l; ++i)
    for (size_t g = 0; g < G.order(); ++g)
      for (long j = 0; j < d.l; ++j)
        for (size_t m = 0; m < d.M.size(); ++m)
          for (size_t x = 0; x < xs; ++x) {
            auto img = d.act_model(i, g, j, m, x);
            if (d.phi(img[0], img[1], img[2]) != d.act_power(i, g, d.phi(j, m, x)))
              throw InvariantViolation("decomposition map is not equivariant");
          }
}

}  // namespace tpow
