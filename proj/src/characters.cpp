#include "tpow/characters.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace tpow {

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclotomic> values) : group_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != group_->num_classes()) throw DomainError("class function has wrong number of values");
}

ClassFunction ClassFunction::zero(const GroupPtr& g) { return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes())); }

ClassFunction ClassFunction::constant(const GroupPtr& g, const Cyclotomic& c) {
  return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), c));
}

Cyclotomic ClassFunction::dimension() const { return values_[group_->class_of(group_->identity())]; }

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool ClassFunction::is_rational() const {
  for (const auto& v : values_)
    if (!v.is_rational()) return false;
  return true;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

ClassFunction ClassFunction::psi(long k) const {
  auto pm = group_->power_class_map(k);
  ClassFunction r = *this;
  for (size_t c = 0; c < values_.size(); ++c) r.values_[c] = values_[pm[c]];
  return r;
}

void ClassFunction::check_same(const ClassFunction& o) const {
  if (group_.get() != o.group_.get()) throw DomainError("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same(o);
  for (size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same(o);
  for (size_t c = 0; c < values_.size(); ++c) values_[c] -= o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  check_same(o);
  for (size_t c = 0; c < values_.size(); ++c) values_[c] *= o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_.get() == b.group_.get() && a.values_ == b.values_;
}

std::string ClassFunction::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t c = 0; c < values_.size(); ++c) os << (c ? ", " : "") << values_[c].str();
  os << ")";
  return os.str();
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group().get() != b.group().get()) throw DomainError("inner product of class functions on different groups");
  const auto& G = *a.group();
  Cyclotomic s;
  for (size_t c = 0; c < G.num_classes(); ++c) {
    Cyclotomic t = a.at(c) * b.at(c).conj();
    s += t * Cyclotomic(static_cast<long>(G.classes()[c].size));
  }
  return s * Cyclotomic(Rat(1, static_cast<unsigned long>(G.order())));
}

std::vector<Rat> CharacterTable::coordinates(const ClassFunction& x) const {
  if (x.group().get() != group.get()) throw DomainError("decomposing a class function of another group");
  std::vector<Rat> m;
  for (const auto& chi : irreducibles) {
    Cyclotomic v = inner_product(x, chi);
    if (!v.is_rational()) throw DomainError("class function is not a rational combination of irreducibles");
    m.push_back(v.rational());
  }
  return m;
}

std::vector<Int> CharacterTable::decompose(const ClassFunction& x) const {
  std::vector<Int> m;
  for (const auto& q : coordinates(x)) {
    if (q.get_den() != 1) throw DomainError("not a virtual character: multiplicity " + q.get_str());
    m.push_back(q.get_num());
  }
  return m;
}

ClassFunction CharacterTable::combine(const std::vector<Int>& mult) const {
  ClassFunction r = ClassFunction::zero(group);
  for (size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0) r += irreducibles[i] * Cyclotomic(mult[i]);
  return r;
}

size_t CharacterTable::index_of_partition(const Partition& p) const {
  for (size_t i = 0; i < partitions.size(); ++i)
    if (partitions[i] == p) return i;
  throw DomainError("no irreducible labelled " + partition_str(p));
}

namespace {

using MNKey = std::pair<Partition, Partition>;

Int mn_rec(const Partition& lambda, const Partition& mu, size_t pos, std::map<MNKey, Int>& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;
  MNKey key{lambda, Partition(mu.begin() + pos, mu.end())};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = mu[pos];
  long k = static_cast<long>(lambda.size());
  std::vector<long> beta(k);
  for (long i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
  Int sum = 0;
  for (long i = 0; i < k; ++i) {
    long b = beta[i], nb = b - r;
    if (nb < 0) continue;
    bool taken = false;
    int between = 0;
    for (long j = 0; j < k; ++j) {
      if (beta[j] == nb) taken = true;
      if (beta[j] > nb && beta[j] < b) ++between;
    }
    if (taken) continue;
    std::vector<long> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    Partition nl;
    for (long j = 0; j < k; ++j) {
      long part = nbeta[j] - (k - 1 - j);
      if (part > 0) nl.push_back(static_cast<int>(part));
    }
    Int sub = mn_rec(nl, mu, pos + 1, memo);
    sum += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), sum);
  return sum;
}

}  // namespace

Int murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  for (int v : lambda) a += v;
  for (int v : mu) b += v;
  if (a != b) throw DomainError("partitions of different sizes");
  Partition m = mu;
  std::sort(m.rbegin(), m.rend());
  thread_local std::map<MNKey, Int> memo;
  return mn_rec(lambda, m, 0, memo);
}

namespace {

struct TableData {
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<std::string> labels;
  std::vector<Partition> partitions;
};

std::string table_key(const FiniteGroup& G) {
  switch (G.kind()) {
    case GroupKind::Symmetric:
      return "S" + std::to_string(G.param());
    case GroupKind::Cyclic:
      return "C" + std::to_string(G.param());
    case GroupKind::Product: {
      std::string k = "(";
      for (size_t i = 0; i < G.factors().size(); ++i) k += (i ? "," : "") + table_key(*G.factors()[i]);
      return k + ")";
    }
    case GroupKind::Generic:
      if (G.order() == 1) return "1";
      break;
  }
  throw DomainError("no character table available for group " + G.name());
}

std::atomic<bool> cache_enabled{true};
std::mutex table_mu;

std::shared_ptr<const TableData> table_data(const GroupPtr& G);

TableData compute_table(const GroupPtr& G) {
  TableData t;
  const auto& classes = G->classes();
  switch (G->kind()) {
    case GroupKind::Symmetric:
      for (const auto& lam : partitions(G->param())) {
        std::vector<Cyclotomic> row;
        for (const auto& c : classes) row.emplace_back(murnaghan_nakayama(lam, c.cycle_type));
        t.values.push_back(std::move(row));
        t.labels.push_back(partition_str(lam));
        t.partitions.push_back(lam);
      }
      break;
    case GroupKind::Cyclic: {
      long n = G->param();
      for (long j = 0; j < n; ++j) {
        std::vector<Cyclotomic> row;
        for (long i = 0; i < n; ++i) row.push_back(Cyclotomic::zeta_power(n, i * j));
        t.values.push_back(std::move(row));
        t.labels.push_back("chi" + std::to_string(j));
      }
      break;
    }
    case GroupKind::Product: {
      t.values = {std::vector<Cyclotomic>(1, Cyclotomic(1))};
      t.labels = {""};
      size_t ncls = 1;
      for (const auto& f : G->factors()) {
        auto ft = table_data(f);
        size_t fc = f->num_classes();
        std::vector<std::vector<Cyclotomic>> vals;
        std::vector<std::string> labs;
        for (size_t a = 0; a < t.values.size(); ++a)
          for (size_t b = 0; b < ft->values.size(); ++b) {
            std::vector<Cyclotomic> row(ncls * fc);
            for (size_t ca = 0; ca < ncls; ++ca)
              for (size_t cb = 0; cb < fc; ++cb) row[ca * fc + cb] = t.values[a][ca] * ft->values[b][cb];
            vals.push_back(std::move(row));
            labs.push_back(t.labels[a].empty() ? ft->labels[b] : t.labels[a] + "x" + ft->labels[b]);
          }
        t.values = std::move(vals);
        t.labels = std::move(labs);
        ncls *= fc;
      }
      break;
    }
    case GroupKind::Generic:
      t.values = {std::vector<Cyclotomic>(1, Cyclotomic(1))};
      t.labels = {"triv"};
      break;
  }
  return t;
}

std::shared_ptr<const TableData> table_data(const GroupPtr& G) {
  static std::map<std::string, std::shared_ptr<const TableData>> cache;
  std::string key = table_key(*G);
  if (cache_enabled) {
    std::lock_guard<std::mutex> lock(table_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto data = std::make_shared<const TableData>(compute_table(G));
  if (!cache_enabled) return data;
  std::lock_guard<std::mutex> lock(table_mu);
  return cache.emplace(key, data).first->second;
}

}  // namespace

void set_character_cache_enabled(bool on) { cache_enabled = on; }

void validate_orthogonality(const CharacterTable& t) {
  const auto& G = *t.group;
  size_t n = t.size();
  if (n != G.num_classes()) throw InvariantViolation("character table is not square for " + G.name());
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Cyclotomic ip = inner_product(t.irreducibles[a], t.irreducibles[b]);
      if (ip != Cyclotomic(a == b ? 1 : 0)) throw InvariantViolation("row orthogonality fails for " + G.name());
    }
  for (size_t c = 0; c < n; ++c)
    for (size_t d = 0; d < n; ++d) {
      Cyclotomic s;
      for (size_t a = 0; a < n; ++a) s += t.irreducibles[a].at(c) * t.irreducibles[a].at(d).conj();
      Rat centralizer(static_cast<long>(G.order()), static_cast<long>(G.classes()[c].size));
      centralizer.canonicalize();
      Cyclotomic expect = c == d ? Cyclotomic(centralizer) : Cyclotomic(0);
      if (s != expect) throw InvariantViolation("column orthogonality fails for " + G.name());
    }
}

std::shared_ptr<const CharacterTable> character_table(const GroupPtr& G) {
  static std::map<const FiniteGroup*, std::pair<GroupPtr, std::shared_ptr<const CharacterTable>>> by_group;
  if (cache_enabled) {
    std::lock_guard<std::mutex> lock(table_mu);
    auto it = by_group.find(G.get());
    if (it != by_group.end()) return it->second.second;
  }
  auto data = table_data(G);
  auto t = std::make_shared<CharacterTable>();
  t->group = G;
  for (const auto& row : data->values) t->irreducibles.emplace_back(G, row);
  t->labels = data->labels;
  t->partitions = data->partitions;
  validate_orthogonality(*t);
  if (!cache_enabled) return t;
  std::lock_guard<std::mutex> lock(table_mu);
  return by_group.emplace(G.get(), std::make_pair(G, t)).first->second.second;
}

ClassFunction induce(const ClassFunction& phi, const Embedding& e) {
  if (phi.group().get() != e.sub.get()) throw DomainError("induced function does not live on the subgroup");
  const auto& G = *e.ambient;
  const auto& H = *e.sub;
  std::vector<Cyclotomic> sums(G.num_classes());
  for (size_t d = 0; d < H.num_classes(); ++d)
    sums[e.class_map[d]] += phi.at(d) * Cyclotomic(static_cast<long>(H.classes()[d].size));
  for (size_t c = 0; c < G.num_classes(); ++c) {
    if (sums[c].is_zero()) continue;
    Rat f(static_cast<long>(G.order()), static_cast<long>(H.order() * G.classes()[c].size));
    f.canonicalize();
    sums[c] *= Cyclotomic(f);
  }
  return ClassFunction(e.ambient, std::move(sums));
}

ClassFunction restrict(const ClassFunction& chi, const Embedding& e) {
  if (chi.group().get() != e.ambient.get()) throw DomainError("restricted function does not live on the ambient group");
  std::vector<Cyclotomic> v;
  for (size_t d = 0; d < e.sub->num_classes(); ++d) v.push_back(chi.at(e.class_map[d]));
  return ClassFunction(e.sub, std::move(v));
}

ClassFunction adams_psi_char(const ClassFunction& chi, long k) { return chi.psi(k); }

std::vector<ClassFunction> exterior_powers(const ClassFunction& chi, long kmax) {
  const GroupPtr& G = chi.group();
  std::vector<ClassFunction> lam{ClassFunction::constant(G, 1)};
  std::vector<ClassFunction> psis{ClassFunction::zero(G)};
  for (long i = 1; i <= kmax; ++i) psis.push_back(chi.psi(i));
  for (long k = 1; k <= kmax; ++k) {
    ClassFunction acc = ClassFunction::zero(G);
    for (long i = 1; i <= k; ++i) {
      ClassFunction term = psis[i] * lam[k - i];
      if (i % 2) acc += term;
      else acc -= term;
    }
    acc *= Cyclotomic(Rat(1, k));
    for (const auto& v : acc.values())
      if (!v.is_integral()) throw DomainError("exterior power is not integral in degree " + std::to_string(k));
    lam.push_back(std::move(acc));
  }
  return lam;
}

ClassFunction exterior_power_char(const ClassFunction& chi, long k) {
  if (k < 0) throw DomainError("negative exterior power");
  return exterior_powers(chi, k).back();
}

ClassFunction trivial_character(const GroupPtr& G) { return ClassFunction::constant(G, 1); }

ClassFunction regular_character(const GroupPtr& G) {
  ClassFunction r = ClassFunction::zero(G);
  r.at(G->class_of(G->identity())) = Cyclotomic(static_cast<long>(G->order()));
  return r;
}

ClassFunction permutation_character(const GroupPtr& G) {
  ClassFunction r = ClassFunction::zero(G);
  for (size_t c = 0; c < G->num_classes(); ++c) {
    const Perm& p = G->element(G->classes()[c].rep);
    long fixed = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] == static_cast<int>(i)) ++fixed;
    r.at(c) = Cyclotomic(fixed);
  }
  return r;
}

ClassFunction sign_character(const GroupPtr& G) {
  ClassFunction r = ClassFunction::zero(G);
  for (size_t c = 0; c < G->num_classes(); ++c) r.at(c) = Cyclotomic(static_cast<long>(perm_sign(G->element(G->classes()[c].rep))));
  return r;
}

ClassFunction outer_product(const std::vector<ClassFunction>& parts, const GroupPtr& product) {
  if (product->kind() != GroupKind::Product || product->factors().size() != parts.size())
    throw DomainError("outer product needs a product group with matching factors");
  for (size_t k = 0; k < parts.size(); ++k)
    if (parts[k].group()->num_classes() != product->factors()[k]->num_classes() ||
        parts[k].group()->order() != product->factors()[k]->order())
      throw DomainError("outer product factor mismatch");
  ClassFunction r = ClassFunction::zero(product);
  for (size_t c = 0; c < product->num_classes(); ++c) {
    auto fc = product->factor_classes(c);
    Cyclotomic v(1);
    for (size_t k = 0; k < parts.size(); ++k) v *= parts[k].at(fc[k]);
    r.at(c) = v;
  }
  return r;
}

ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b, const GroupPtr& product) {
  return outer_product(std::vector<ClassFunction>{a, b}, product);
}

const Cyclotomic& value_at_element(const ClassFunction& chi, size_t elem) { return chi.at(chi.group()->class_of(elem)); }

Int kostka_number(const Partition& lambda, const Partition& mu) {
  int n = 0, m = 0;
  for (int x : lambda) n += x;
  for (int x : mu) m += x;
  if (n != m) throw DomainError("kostka_number: partitions of different sizes");
  std::function<Int(const std::vector<int>&, size_t)> rec = [&](const std::vector<int>& shape, size_t v) -> Int {
    if (v == mu.size()) return shape == std::vector<int>(lambda.begin(), lambda.end()) ? 1 : 0;
    // add a horizontal strip of size mu[v] inside lambda
    Int total = 0;
    std::vector<int> next = shape;
    std::function<void(size_t, int)> strip = [&](size_t row, int left) {
      if (row == lambda.size()) {
        if (left == 0) total += rec(next, v + 1);
        return;
      }
      int cap = lambda[row];
      if (row > 0) cap = std::min(cap, shape[row - 1]);
      for (int add = 0; add <= left && shape[row] + add <= cap; ++add) {
        next[row] = shape[row] + add;
        strip(row + 1, left - add);
      }
      next[row] = shape[row];
    };
    strip(0, mu[v]);
    return total;
  };
  return rec(std::vector<int>(lambda.size(), 0), 0);
}

std::vector<ClassFunction> young_rule_characters(int l) {
  if (l < 1 || l > 7) throw DomainError("young_rule_characters needs 1 <= l <= 7");
  auto G = FiniteGroup::symmetric(l);
  auto parts = partitions(l);
  // permutation characters of the tabloid modules
  std::vector<ClassFunction> perm;
  for (const auto& mu : parts) {
    std::vector<std::vector<int>> tabloids;
    std::vector<int> row(l, 0), used(mu.size(), 0);
    std::function<void(int)> fill = [&](int x) {
      if (x == l) {
        tabloids.push_back(row);
        return;
      }
      for (size_t r = 0; r < mu.size(); ++r)
        if (used[r] < mu[r]) {
          row[x] = static_cast<int>(r);
          used[r]++;
          fill(x + 1);
          used[r]--;
        }
    };
    fill(0);
    ClassFunction chi = ClassFunction::zero(G);
    for (size_t c = 0; c < G->num_classes(); ++c) {
      const Perm& s = G->element(G->classes()[c].rep);
      long fixed = 0;
      for (const auto& t : tabloids) {
        bool ok = true;
        for (int x = 0; x < l && ok; ++x) ok = t[s[x]] == t[x];
        fixed += ok;
      }
      chi.at(c) = Cyclotomic(fixed);
    }
    perm.push_back(chi);
  }
  // M^mu = sum_lambda K_{lambda mu} S^lambda with K unitriangular in lex order
  std::vector<ClassFunction> irr(parts.size());
  for (size_t j = 0; j < parts.size(); ++j) {
    ClassFunction chi = perm[j];
    for (size_t i = 0; i < j; ++i) {
      Int k = kostka_number(parts[i], parts[j]);
      if (k != 0) chi -= irr[i] * Cyclotomic(k);
    }
    irr[j] = chi;
  }
  return irr;
}

}  // namespace tpow
