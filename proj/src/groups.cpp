#include "tpow/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace tpow {

Perm perm_identity(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different degree");
  Perm r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

Perm perm_power(const Perm& a, long k) {
  Perm base = k < 0 ? perm_inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm r = perm_identity(static_cast<int>(a.size()));
  while (e) {
    if (e & 1) r = perm_compose(r, base);
    base = perm_compose(base, base);
    e >>= 1;
  }
  return r;
}

bool perm_valid(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (int v : a) {
    if (v < 0 || static_cast<size_t>(v) >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::vector<int>> perm_cycles(const Perm& a) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(a.size(), false);
  for (size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = a[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Partition cycle_type(const Perm& a) {
  Partition t;
  for (const auto& c : perm_cycles(a)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int perm_sign(const Perm& a) {
  int s = 1;
  for (const auto& c : perm_cycles(a))
    if (c.size() % 2 == 0) s = -s;
  return s;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

namespace {

std::mutex cache_mu;
std::map<std::string, GroupPtr>& group_cache() {
  static std::map<std::string, GroupPtr> c;
  return c;
}

GroupPtr cached(const std::string& key, const std::function<GroupPtr()>& make) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = group_cache().find(key);
    if (it != group_cache().end()) return it->second;
  }
  GroupPtr g = make();
  std::lock_guard<std::mutex> lock(cache_mu);
  return group_cache().emplace(key, g).first->second;
}

std::vector<Perm> bfs_closure(int degree, const std::vector<Perm>& gens, size_t cap) {
  Perm id = perm_identity(degree);
  std::vector<Perm> elems{id};
  std::set<Perm> seen{id};
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    Perm e = elems[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      Perm n = perm_compose(g, e);
      if (seen.insert(n).second) {
        if (elems.size() >= cap)
          throw DomainError("group closure exceeds cap " + std::to_string(cap) + " (partial size " +
                            std::to_string(elems.size()) + ")");
        elems.push_back(n);
        queue.push_back(elems.size() - 1);
      }
    }
  }
  return elems;
}

}  // namespace

void FiniteGroup::finish() {
  index_.clear();
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) throw InvariantViolation("duplicate group element");
  }
  identity_ = index_of(perm_identity(degree_));
  inverse_.resize(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(perm_inverse(elements_[i]));
  if (elements_.size() <= 1000) {
    table_.assign(elements_.size(), std::vector<unsigned>(elements_.size()));
    for (size_t a = 0; a < elements_.size(); ++a)
      for (size_t b = 0; b < elements_.size(); ++b)
        table_[a][b] = static_cast<unsigned>(index_of(perm_compose(elements_[a], elements_[b])));
  }
  class_of_.assign(elements_.size(), npos);
  for (size_t c = 0; c < classes_.size(); ++c) {
    classes_[c].size = classes_[c].members.size();
    if (classes_[c].cycle_type.empty()) classes_[c].cycle_type = cycle_type(elements_[classes_[c].rep]);
    for (size_t m : classes_[c].members) class_of_[m] = c;
  }
  for (size_t i = 0; i < elements_.size(); ++i)
    if (class_of_[i] == npos) throw InvariantViolation("element without a conjugacy class");
}

void FiniteGroup::build_classes_generic() {
  classes_.clear();
  std::vector<bool> done(elements_.size(), false);
  for (size_t g = 0; g < elements_.size(); ++g) {
    if (done[g]) continue;
    std::set<size_t> orbit;
    for (const auto& x : elements_) {
      Perm c = perm_compose(perm_compose(x, elements_[g]), perm_inverse(x));
      orbit.insert(index_of(c));
    }
    ConjugacyClass cc;
    cc.rep = g;
    cc.members.assign(orbit.begin(), orbit.end());
    for (size_t m : cc.members) done[m] = true;
    classes_.push_back(std::move(cc));
  }
}

GroupPtr FiniteGroup::symmetric(int l) {
  if (l < 0) throw DomainError("symmetric group of negative degree");
  return cached("S" + std::to_string(l), [l] {
    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->kind_ = GroupKind::Symmetric;
    g->name_ = "S" + std::to_string(l);
    g->degree_ = l;
    g->param_ = l;
    std::vector<Perm> gens;
    if (l >= 2) {
      Perm t = perm_identity(l);
      std::swap(t[0], t[1]);
      Perm c(l);
      for (int i = 0; i < l; ++i) c[i] = (i + 1) % l;
      gens = {t, c};
    }
    g->elements_ = bfs_closure(l, gens, kDefaultCap);
    std::map<Partition, std::vector<size_t>> by_type;
    for (size_t i = 0; i < g->elements_.size(); ++i) by_type[cycle_type(g->elements_[i])].push_back(i);
    for (auto& [type, members] : by_type) {
      ConjugacyClass cc;
      cc.rep = members.front();
      cc.cycle_type = type;
      cc.members = members;
      g->class_by_type_[type] = g->classes_.size();
      g->classes_.push_back(std::move(cc));
    }
    g->finish();
    return GroupPtr(g);
  });
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  return cached("C" + std::to_string(n), [n] {
    Perm gen(n);
    for (int i = 0; i < n; ++i) gen[i] = (i + 1) % n;
    return cyclic_generated(n, gen, "C" + std::to_string(n));
  });
}

GroupPtr FiniteGroup::cyclic_generated(int degree, const Perm& gen, const std::string& name) {
  if (static_cast<int>(gen.size()) != degree || !perm_valid(gen)) throw DomainError("invalid cyclic generator");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->kind_ = GroupKind::Cyclic;
  g->name_ = name;
  g->degree_ = degree;
  Perm id = perm_identity(degree);
  Perm cur = id;
  do {
    g->elements_.push_back(cur);
    cur = perm_compose(gen, cur);
  } while (cur != id);
  g->param_ = static_cast<int>(g->elements_.size());
  for (size_t i = 0; i < g->elements_.size(); ++i) {
    ConjugacyClass cc;
    cc.rep = i;
    cc.members = {i};
    g->classes_.push_back(std::move(cc));
  }
  g->finish();
  return GroupPtr(g);
}

GroupPtr FiniteGroup::product(const std::vector<GroupPtr>& factors) {
  std::string key = "P(";
  for (size_t i = 0; i < factors.size(); ++i) key += (i ? "," : "") + factors[i]->name();
  key += ")";
  bool cacheable = std::all_of(factors.begin(), factors.end(), [](const GroupPtr& f) {
    if (f->kind() == GroupKind::Symmetric) return true;
    return f->kind() == GroupKind::Cyclic && f.get() == FiniteGroup::cyclic(f->param()).get();
  });
  auto make = [factors] {
    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->kind_ = GroupKind::Product;
    g->factors_ = factors;
    std::string name;
    for (size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i]->name();
    g->name_ = factors.empty() ? "1" : name;
    for (const auto& f : factors) g->degree_ += f->degree();
    size_t total = 1;
    for (const auto& f : factors) total *= f->order();
    for (size_t e = 0; e < total; ++e) {
      size_t rest = e;
      std::vector<size_t> idx(factors.size());
      for (size_t k = factors.size(); k-- > 0;) {
        idx[k] = rest % factors[k]->order();
        rest /= factors[k]->order();
      }
      Perm p;
      int off = 0;
      for (size_t k = 0; k < factors.size(); ++k) {
        for (int v : factors[k]->element(idx[k])) p.push_back(v + off);
        off += factors[k]->degree();
      }
      g->elements_.push_back(std::move(p));
    }
    size_t nclasses = 1;
    for (const auto& f : factors) nclasses *= f->num_classes();
    g->classes_.resize(nclasses);
    for (size_t e = 0; e < total; ++e) {
      size_t rest = e;
      std::vector<size_t> cls(factors.size());
      for (size_t k = factors.size(); k-- > 0;) {
        size_t fi = rest % factors[k]->order();
        rest /= factors[k]->order();
        cls[k] = factors[k]->class_of(fi);
      }
      size_t c = 0;
      for (size_t k = 0; k < factors.size(); ++k) c = c * factors[k]->num_classes() + cls[k];
      g->classes_[c].members.push_back(e);
    }
    for (auto& cc : g->classes_) cc.rep = cc.members.front();
    g->finish();
    return GroupPtr(g);
  };
  return cacheable ? cached(key, make) : make();
}

GroupPtr FiniteGroup::young(const std::vector<int>& blocks) {
  std::vector<GroupPtr> f;
  for (int b : blocks) f.push_back(symmetric(b));
  return product(f);
}

GroupPtr FiniteGroup::generated(int degree, const std::vector<Perm>& gens, const std::string& name, size_t cap) {
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != degree || !perm_valid(p)) throw DomainError("invalid generator");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->kind_ = GroupKind::Generic;
  g->name_ = name;
  g->degree_ = degree;
  g->elements_ = bfs_closure(degree, gens, cap);
  g->index_.clear();
  for (size_t i = 0; i < g->elements_.size(); ++i) g->index_.emplace(g->elements_[i], i);
  g->build_classes_generic();
  g->finish();
  return GroupPtr(g);
}

size_t FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

size_t FiniteGroup::index_of(const Perm& p) const {
  size_t i = find(p);
  if (i == npos) throw DomainError("permutation not in group " + name_);
  return i;
}

size_t FiniteGroup::mul(size_t a, size_t b) const {
  if (!table_.empty()) return table_[a][b];
  return index_of(perm_compose(elements_[a], elements_[b]));
}

size_t FiniteGroup::power(size_t a, long k) const {
  long n = static_cast<long>(order());
  long e = mod_floor(k, n);
  size_t r = identity_, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

size_t FiniteGroup::element_order(size_t a) const {
  size_t k = 1;
  for (size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

size_t FiniteGroup::class_of_perm(const Perm& p) const {
  if (kind_ == GroupKind::Symmetric) {
    auto it = class_by_type_.find(cycle_type(p));
    if (it == class_by_type_.end() || static_cast<int>(p.size()) != degree_)
      throw DomainError("permutation not in " + name_);
    return it->second;
  }
  return class_of_[index_of(p)];
}

std::vector<size_t> FiniteGroup::power_class_map(long k) const {
  std::vector<size_t> r(classes_.size());
  for (size_t c = 0; c < classes_.size(); ++c) r[c] = class_of_[power(classes_[c].rep, k)];
  return r;
}

std::vector<size_t> FiniteGroup::factor_indices(size_t elem) const {
  if (kind_ != GroupKind::Product) throw DomainError("factor indices of a non-product group");
  std::vector<size_t> idx(factors_.size());
  for (size_t k = factors_.size(); k-- > 0;) {
    idx[k] = elem % factors_[k]->order();
    elem /= factors_[k]->order();
  }
  return idx;
}

size_t FiniteGroup::from_factor_indices(const std::vector<size_t>& idx) const {
  size_t e = 0;
  for (size_t k = 0; k < factors_.size(); ++k) e = e * factors_[k]->order() + idx[k];
  return e;
}

std::vector<size_t> FiniteGroup::factor_classes(size_t cls) const {
  if (kind_ != GroupKind::Product) throw DomainError("factor classes of a non-product group");
  std::vector<size_t> idx(factors_.size());
  for (size_t k = factors_.size(); k-- > 0;) {
    idx[k] = cls % factors_[k]->num_classes();
    cls /= factors_[k]->num_classes();
  }
  return idx;
}

size_t FiniteGroup::class_from_factor_classes(const std::vector<size_t>& idx) const {
  size_t c = 0;
  for (size_t k = 0; k < factors_.size(); ++k) c = c * factors_[k]->num_classes() + idx[k];
  return c;
}

std::vector<GroupPtr> subgroups(const GroupPtr& G) {
  using Set = std::vector<size_t>;
  auto closure = [&](const std::set<size_t>& gens) {
    std::set<size_t> s{G->identity()};
    std::deque<size_t> q{G->identity()};
    while (!q.empty()) {
      size_t e = q.front();
      q.pop_front();
      for (size_t g : gens) {
        size_t n = G->mul(g, e);
        if (s.insert(n).second) q.push_back(n);
      }
    }
    return Set(s.begin(), s.end());
  };
  std::set<Set> found;
  std::map<Set, size_t> cyclic_gen;
  for (size_t g = 0; g < G->order(); ++g) {
    Set s = closure({g});
    if (found.insert(s).second) cyclic_gen[s] = g;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(found.begin(), found.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        std::set<size_t> gens(cur[a].begin(), cur[a].end());
        gens.insert(cur[b].begin(), cur[b].end());
        if (found.insert(closure(gens)).second) grew = true;
      }
  }
  std::vector<Set> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Set& a, const Set& b) { return a.size() < b.size(); });
  std::vector<GroupPtr> out;
  for (const auto& s : sorted) {
    if (s.size() == G->order()) {
      out.push_back(G);
      continue;
    }
    auto it = cyclic_gen.find(s);
    std::ostringstream name;
    if (it != cyclic_gen.end()) {
      name << "C" << s.size() << "<" << G->name() << ">[" << it->second << "]";
      out.push_back(FiniteGroup::cyclic_generated(G->degree(), G->element(it->second), name.str()));
    } else {
      name << "H" << s.size() << "<" << G->name() << ">[";
      for (size_t i = 0; i < s.size(); ++i) name << (i ? "," : "") << s[i];
      name << "]";
      std::vector<Perm> gens;
      for (size_t e : s) gens.push_back(G->element(e));
      out.push_back(FiniteGroup::generated(G->degree(), gens, name.str()));
    }
  }
  return out;
}

Embedding make_embedding(const GroupPtr& sub, const GroupPtr& ambient) {
  if (sub->degree() != ambient->degree()) throw DomainError("embedding between groups of different degree");
  Embedding e{sub, ambient, {}, {}};
  e.element_map.resize(sub->order());
  for (size_t i = 0; i < sub->order(); ++i) {
    size_t j = ambient->find(sub->element(i));
    if (j == FiniteGroup::npos) throw DomainError(sub->name() + " is not contained in " + ambient->name());
    e.element_map[i] = j;
  }
  std::set<size_t> distinct(e.element_map.begin(), e.element_map.end());
  if (distinct.size() != e.element_map.size()) throw DomainError("embedding is not injective");
  for (const auto& c : sub->classes()) e.class_map.push_back(ambient->class_of(e.element_map[c.rep]));
  return e;
}

const Embedding& cached_embedding(const GroupPtr& sub, const GroupPtr& ambient) {
  static std::mutex mu;
  static std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{sub.get(), ambient.get()}];
  if (!slot) slot = std::make_unique<Embedding>(make_embedding(sub, ambient));
  return *slot;
}

}  // namespace tpow
