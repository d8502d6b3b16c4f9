#include "tpow/koszul.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace tpow {

// ------------------------------------------------------------------ polynomials

GPoly gpoly_mul(const GPoly& a, const GPoly& b) {
  GPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      Rat& slot = r[m];
      slot += ca * cb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

GPoly gpoly_add(const GPoly& a, const GPoly& b, const Rat& scale) {
  GPoly r = a;
  for (const auto& [m, c] : b) {
    Rat& slot = r[m];
    slot += scale * c;
    if (slot == 0) r.erase(m);
  }
  return r;
}

GPoly gpoly_variable(int nvars, int v) {
  Monomial m(nvars, 0);
  m.at(v) = 1;
  return gpoly_monomial(m);
}

GPoly gpoly_monomial(const Monomial& m, const Rat& c) {
  GPoly r;
  if (c != 0) r[m] = c;
  return r;
}

namespace {

std::string monomial_str(const Monomial& m, const std::string& var = "x", int offset = 1) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (any) os << "*";
    os << var << (i + offset);
    if (m[i] > 1) os << "^" << m[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace

std::string gpoly_str(const GPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    Rat c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    std::string mono = monomial_str(it->first);
    if (mono == "1") os << to_string(c);
    else if (c == 1) os << mono;
    else os << to_string(c) << "*" << mono;
    first = false;
  }
  return os.str();
}

std::string FieldDescriptor::str() const { return p ? "F_" + std::to_string(p) : "Q"; }

// ------------------------------------------------------------------ linear algebra

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  __int128 r = 1, x = b % p;
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_of(const Int& v, std::int64_t p) {
  Int r = v % Int(static_cast<long>(p));
  if (r < 0) r += p;
  return r.get_si();
}

MatQ mat_mul(const MatQ& A, const MatQ& B, size_t bcols) {
  MatQ C(A.size(), std::vector<Rat>(bcols, 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t k = 0; k < A[i].size(); ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < bcols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

MatQ identity_matrix(size_t n) {
  MatQ m(n, std::vector<Rat>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

IncrementalRank::IncrementalRank(size_t ncols, FieldDescriptor k) : ncols_(ncols), k_(k) {
  if (k.p && (!is_prime(k.p) || k.p > 3037000493L)) throw DomainError("field characteristic must be a prime below 2^31.5");
}

std::vector<std::int64_t> IncrementalRank::to_mod(const std::vector<Rat>& v) const {
  std::vector<std::int64_t> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t den = mod_of(v[i].get_den(), k_.p);
    if (den == 0) throw DomainError("entry has a denominator divisible by the characteristic");
    r[i] = static_cast<std::int64_t>(static_cast<__int128>(mod_of(v[i].get_num(), k_.p)) * mod_pow(den, k_.p - 2, k_.p) % k_.p);
  }
  return r;
}

std::vector<Rat> IncrementalRank::reduce(std::vector<Rat> v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    Rat c = v[pivots_[k]];
    if (c == 0) continue;
    for (size_t j = pivots_[k]; j < ncols_; ++j)
      if (rows_[k][j] != 0) v[j] -= c * rows_[k][j];
  }
  return v;
}

std::vector<std::int64_t> IncrementalRank::reduce_mod(std::vector<std::int64_t> v) const {
  const std::int64_t p = k_.p;
  for (size_t k = 0; k < modrows_.size(); ++k) {
    std::int64_t c = v[pivots_[k]];
    if (c == 0) continue;
    for (size_t j = pivots_[k]; j < ncols_; ++j)
      if (modrows_[k][j]) v[j] = static_cast<std::int64_t>((v[j] + static_cast<__int128>(p - c) * modrows_[k][j]) % p);
  }
  return v;
}

bool IncrementalRank::add(const std::vector<Rat>& v) {
  if (v.size() != ncols_) throw DomainError("row length mismatch");
  if (k_.p) {
    auto r = reduce_mod(to_mod(v));
    auto it = std::find_if(r.begin(), r.end(), [](std::int64_t x) { return x != 0; });
    if (it == r.end()) return false;
    size_t piv = static_cast<size_t>(it - r.begin());
    std::int64_t inv = mod_pow(r[piv], k_.p - 2, k_.p);
    for (auto& x : r) x = static_cast<std::int64_t>(static_cast<__int128>(x) * inv % k_.p);
    modrows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }
  auto r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rat& x) { return x != 0; });
  if (it == r.end()) return false;
  size_t piv = static_cast<size_t>(it - r.begin());
  Rat inv = 1 / r[piv];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool IncrementalRank::contains(const std::vector<Rat>& v) const {
  if (k_.p) {
    auto r = reduce_mod(to_mod(v));
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
  }
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

size_t rank_over_field(const MatQ& m, const FieldDescriptor& k) {
  if (m.empty()) return 0;
  IncrementalRank r(m[0].size(), k);
  for (const auto& row : m) r.add(row);
  return r.rank();
}

// ------------------------------------------------------------------ graded algebra

GradedAlgebra::GradedAlgebra(int nvars, FieldDescriptor k, std::vector<int> weights)
    : nvars_(nvars), k_(k), weights_(std::move(weights)) {
  if (nvars < 0) throw DomainError("negative number of variables");
  if (weights_.empty()) weights_.assign(nvars, 1);
  if (static_cast<int>(weights_.size()) != nvars) throw DomainError("one weight per variable");
  for (int w : weights_)
    if (w <= 0) throw DomainError("variable degrees must be positive");
  if (k.p && !is_prime(k.p)) throw DomainError("field characteristic must be prime");
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars_; ++i) d += m[i] * weights_[i];
  return d;
}

int GradedAlgebra::degree(const GPoly& p) const {
  if (p.empty()) throw DomainError("the zero polynomial has no degree");
  int d = degree(p.begin()->first);
  for (const auto& t : p)
    if (degree(t.first) != d) throw DomainError("polynomial is not homogeneous: " + gpoly_str(p));
  return d;
}

std::vector<Monomial> GradedAlgebra::basis(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(nvars_, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars_) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (int e = left / weights_[i]; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e * weights_[i]);
    }
    m[i] = 0;
  };
  rec(0, d);
  return out;
}

GradedMap GradedMap::compose_after(const GradedMap& first) const {
  if (first.bound != bound) throw DomainError("graded maps with different bounds");
  GradedMap r;
  r.bound = bound;
  r.source_dims = first.source_dims;
  r.target_dims = target_dims;
  for (int d = 0; d <= bound; ++d) {
    if (first.target_dims[d] != source_dims[d]) throw DomainError("graded maps do not compose");
    r.blocks.push_back(mat_mul(blocks[d], first.blocks[d], first.source_dims[d]));
  }
  return r;
}

bool GradedMap::is_zero() const {
  for (const auto& b : blocks)
    for (const auto& row : b)
      for (const auto& x : row)
        if (x != 0) return false;
  return true;
}

ClassFunction EquivariantGradedModule::character(int d) const {
  ClassFunction chi = ClassFunction::zero(group);
  for (size_t c = 0; c < group->num_classes(); ++c) {
    const MatQ& m = action[d][group->classes()[c].rep];
    Rat t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    chi.at(c) = Cyclotomic(t);
  }
  return chi;
}

bool EquivariantGradedModule::satisfies_relations() const {
  for (size_t d = 0; d < dims.size(); ++d) {
    if (action[d][group->identity()] != identity_matrix(dims[d])) return false;
    for (size_t g = 0; g < group->order(); ++g)
      for (size_t h = 0; h < group->order(); ++h)
        if (mat_mul(action[d][g], action[d][h], dims[d]) != action[d][group->mul(g, h)]) return false;
  }
  return true;
}

// ------------------------------------------------------------------ Koszul complexes

KoszulComplex koszul_complex(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound) {
  size_t m = generators.size();
  if (m > 16) throw DomainError("at most 16 generators");
  if (bound < 0) throw DomainError("negative degree bound");
  std::vector<int> gdeg;
  for (const auto& g : generators) {
    for (const auto& t : g)
      if (static_cast<int>(t.first.size()) != A.nvars()) throw DomainError("generator in the wrong number of variables");
    gdeg.push_back(A.degree(g));
  }
  KoszulComplex K;
  K.algebra = &A;
  K.generators = generators;
  K.bound = bound;
  K.bases.assign(m + 1, std::vector<std::vector<std::pair<unsigned, Monomial>>>(bound + 1));
  std::vector<std::vector<std::map<std::pair<unsigned, Monomial>, size_t>>> index(
      m + 1, std::vector<std::map<std::pair<unsigned, Monomial>, size_t>>(bound + 1));
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    size_t i = static_cast<size_t>(std::popcount(mask));
    int shift = 0;
    for (size_t j = 0; j < m; ++j)
      if (mask >> j & 1) shift += gdeg[j];
    for (int d = 0; d <= bound; ++d)
      for (auto& mono : A.basis(d - shift)) {
        index[i][d][{mask, mono}] = K.bases[i][d].size();
        K.bases[i][d].push_back({mask, mono});
      }
  }
  // keep bases ordered by subset then monomial
  for (size_t i = 0; i <= m; ++i)
    for (int d = 0; d <= bound; ++d) {
      std::sort(K.bases[i][d].begin(), K.bases[i][d].end());
      index[i][d].clear();
      for (size_t k = 0; k < K.bases[i][d].size(); ++k) index[i][d][K.bases[i][d][k]] = k;
    }
  K.differentials.resize(m + 1);
  for (size_t i = 1; i <= m; ++i) {
    GradedMap& D = K.differentials[i];
    D.bound = bound;
    for (int d = 0; d <= bound; ++d) {
      size_t rows = K.bases[i - 1][d].size(), cols = K.bases[i][d].size();
      D.source_dims.push_back(cols);
      D.target_dims.push_back(rows);
      MatQ M(rows, std::vector<Rat>(cols, 0));
      for (size_t c = 0; c < cols; ++c) {
        const auto& [mask, mono] = K.bases[i][d][c];
        int pos = 0;
        for (size_t j = 0; j < m; ++j) {
          if (!(mask >> j & 1)) continue;
          unsigned rest = mask & ~(1u << j);
          Rat sign = pos % 2 ? -1 : 1;
          for (const auto& [gm, gc] : generators[j]) {
            Monomial prod = mono;
            for (size_t v = 0; v < prod.size(); ++v) prod[v] += gm[v];
            M[index[i - 1][d].at({rest, prod})][c] += sign * gc;
          }
          ++pos;
        }
      }
      D.blocks.push_back(std::move(M));
    }
  }
  return K;
}

std::string KoszulHomology::table_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < dims.size(); ++i) {
    os << "H_" << i << ":";
    for (auto v : dims[i]) os << " " << v;
    if (i + 1 < dims.size()) os << "; ";
  }
  return os.str();
}

KoszulHomology koszul_homology_dimensions(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound) {
  KoszulComplex K = koszul_complex(A, generators, bound);
  size_t m = generators.size();
  KoszulHomology H;
  H.bound = bound;
  std::vector<std::vector<size_t>> rk(m + 2, std::vector<size_t>(bound + 1, 0));
  for (size_t i = 1; i <= m; ++i)
    for (int d = 0; d <= bound; ++d) rk[i][d] = rank_over_field(K.differentials[i].blocks[d], A.field());
  H.dims.assign(m + 1, std::vector<size_t>(bound + 1, 0));
  for (size_t i = 0; i <= m; ++i)
    for (int d = 0; d <= bound; ++d) H.dims[i][d] = K.bases[i][d].size() - rk[i][d] - rk[i + 1][d];
  H.dd_zero = true;
  for (size_t i = 2; i <= m; ++i) {
    GradedMap dd = K.differentials[i - 1].compose_after(K.differentials[i]);
    if (A.field().p) {
      for (const auto& b : dd.blocks)
        if (!b.empty() && rank_over_field(b, A.field()) != 0) H.dd_zero = false;
    } else if (!dd.is_zero()) {
      H.dd_zero = false;
    }
  }
  return H;
}

KoszulHomology koszul_linear_oracle(const GradedAlgebra& A, const std::vector<GPoly>& generators, int bound) {
  int n = A.nvars();
  for (int v = 0; v < n; ++v) {
    Monomial e(n, 0);
    e[v] = 1;
    if (A.degree(e) != 1) throw DomainError("closed formula needs standard grading");
  }
  size_t m = generators.size();
  KoszulHomology H;
  H.bound = bound;
  H.dd_zero = true;
  H.dims.assign(m + 1, std::vector<size_t>(bound + 1, 0));
  MatQ coeff;
  for (const auto& g : generators) {
    int d = A.degree(g);
    if (d == 0) return H;  // unit ideal: the complex is contractible
    if (d > 1) throw DomainError("closed formula covers generators of degree at most one");
    std::vector<Rat> row(n, 0);
    for (const auto& [mono, c] : g)
      for (int v = 0; v < n; ++v)
        if (mono[v]) row[v] = c;
    coeff.push_back(row);
  }
  long r = static_cast<long>(rank_over_field(coeff, A.field()));
  long e = static_cast<long>(m) - r;
  long q = n - r;
  auto quotient_dim = [&](long t) -> Int {
    if (t < 0) return 0;
    if (q == 0) return t == 0 ? 1 : 0;
    return binomial(t + q - 1, static_cast<unsigned long>(q - 1));
  };
  for (long i = 0; i <= static_cast<long>(m); ++i)
    for (long d = 0; d <= bound; ++d) {
      Int v = i <= e ? binomial(e, static_cast<unsigned long>(i)) * quotient_dim(d - i) : Int(0);
      H.dims[i][d] = v.get_ui();
    }
  if (e > bound)
    H.notes.push_back("degree bound " + std::to_string(bound) + " is below degree " + std::to_string(e) +
                      " where the top exterior power of the kernel lives; comparison is truncated");
  return H;
}

HomotopyCheck augmentation_homotopy_check(long l) {
  if (l < 1 || l > 16) throw DomainError("l must lie in 1..16");
  using Vec = std::map<unsigned, Int>;
  auto add = [](Vec& v, unsigned k, const Int& c) {
    Int& s = v[k];
    s += c;
    if (s == 0) v.erase(k);
  };
  auto d = [&](const Vec& x) {
    Vec r;
    for (const auto& [mask, c] : x) {
      int pos = 0;
      for (long j = 0; j < l; ++j)
        if (mask >> j & 1) add(r, mask & ~(1u << j), pos++ % 2 ? Int(-c) : c);
    }
    return r;
  };
  auto h = [&](const Vec& x) {
    Vec r;
    for (const auto& [mask, c] : x)
      if (!(mask & 1u)) add(r, mask | 1u, c);
    return r;
  };
  HomotopyCheck out;
  out.l = l;
  out.dd_zero = true;
  out.homotopy_identity = true;
  out.ranks.assign(l + 1, 0);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    out.ranks[std::popcount(mask)]++;
    Vec e{{mask, 1}};
    if (!d(d(e)).empty()) out.dd_zero = false;
    Vec s = d(h(e));
    for (const auto& [k, c] : h(d(e))) add(s, k, c);
    if (s != e) out.homotopy_identity = false;
  }
  return out;
}

// ------------------------------------------------------------------ diagonal conormal

namespace {

// (sigma . m) moves copy i to copy sigma(i); monomials are copy-major with n variables per copy.
Monomial permute_copies(const Monomial& m, const Perm& sigma, int n) {
  Monomial r(m.size(), 0);
  for (size_t i = 0; i < sigma.size(); ++i)
    for (int a = 0; a < n; ++a) r[sigma[i] * n + a] = m[i * n + a];
  return r;
}

std::map<Monomial, size_t> index_map(const std::vector<Monomial>& b) {
  std::map<Monomial, size_t> r;
  for (size_t i = 0; i < b.size(); ++i) r[b[i]] = i;
  return r;
}

// [i] - [i+1] under sigma, in the basis [t] - [t+1]
std::vector<Rat> h_image(const Perm& sigma, int i, long l) {
  std::vector<Rat> v(l - 1, 0);
  int a = sigma[i], b = sigma[i + 1];
  if (a < b)
    for (int t = a; t < b; ++t) v[t] += 1;
  else
    for (int t = b; t < a; ++t) v[t] -= 1;
  return v;
}

}  // namespace

bool ConormalReport::pass() const {
  if (!relations_ok) return false;
  for (const auto& d : degrees)
    if (!d.match || !d.alpha_bijective || !d.alpha_equivariant) return false;
  return true;
}

ConormalReport diagonal_conormal(int nvars, long l, int bound) {
  if (nvars < 1 || l < 1 || l > 5 || bound < 0) throw DomainError("need nvars >= 1, 1 <= l <= 5, bound >= 0");
  int n = nvars;
  int N = static_cast<int>(l) * n;
  GradedAlgebra B(n), T(N);
  GroupPtr S = FiniteGroup::symmetric(static_cast<int>(l));
  ConormalReport rep;
  rep.nvars = n;
  rep.l = l;
  rep.bound = bound;
  EquivariantGradedModule conormal{S, {}, {}}, omega{S, {}, {}};
  // I is generated by x_{a,i} - x_{a,i+1}
  std::vector<GPoly> gens;
  for (long i = 0; i + 1 < l; ++i)
    for (int a = 0; a < n; ++a)
      gens.push_back(gpoly_add(gpoly_variable(N, static_cast<int>(i) * n + a), gpoly_variable(N, static_cast<int>(i + 1) * n + a), -1));
  for (int d = 0; d <= bound; ++d) {
    auto V = T.basis(d);
    auto Vi = index_map(V);
    auto Bd = B.basis(d);
    auto Bi = index_map(Bd);
    auto to_vec = [&](const GPoly& p) {
      std::vector<Rat> v(V.size(), 0);
      for (const auto& [mono, c] : p) v[Vi.at(mono)] = c;
      return v;
    };
    // kernel of multiplication
    MatQ mu(Bd.size(), std::vector<Rat>(V.size(), 0));
    for (size_t c = 0; c < V.size(); ++c) {
      Monomial img(n, 0);
      for (long i = 0; i < l; ++i)
        for (int a = 0; a < n; ++a) img[a] += V[c][i * n + a];
      mu[Bi.at(img)][c] = 1;
    }
    MatQ Id = V.empty() ? MatQ{} : kernel_rational(mu);
    // I^2 in degree d
    IncrementalRank W(V.size(), {});
    MatQ wbasis;
    if (d >= 2)
      for (size_t g1 = 0; g1 < gens.size(); ++g1)
        for (size_t g2 = g1; g2 < gens.size(); ++g2) {
          GPoly prod = gpoly_mul(gens[g1], gens[g2]);
          for (const auto& mono : T.basis(d - 2)) {
            auto v = to_vec(gpoly_mul(prod, gpoly_monomial(mono)));
            if (W.add(v)) wbasis.push_back(v);
          }
        }
    MatQ qbasis;
    for (const auto& v : Id)
      if (W.add(v)) qbasis.push_back(v);
    MatQ solve_matrix(V.size(), std::vector<Rat>(wbasis.size() + qbasis.size(), 0));
    for (size_t r = 0; r < V.size(); ++r) {
      for (size_t k = 0; k < wbasis.size(); ++k) solve_matrix[r][k] = wbasis[k][r];
      for (size_t k = 0; k < qbasis.size(); ++k) solve_matrix[r][wbasis.size() + k] = qbasis[k][r];
    }
    auto quotient_coords = [&](const std::vector<Rat>& v) {
      std::vector<Rat> q(qbasis.size(), 0);
      if (qbasis.empty()) return q;
      auto sol = solve_rational(solve_matrix, v);
      if (!sol) throw InvariantViolation("vector is not in the diagonal ideal");
      for (size_t k = 0; k < qbasis.size(); ++k) q[k] = (*sol)[wbasis.size() + k];
      return q;
    };
    auto act_vec = [&](const std::vector<Rat>& v, const Perm& sigma) {
      std::vector<Rat> r(V.size(), 0);
      for (size_t c = 0; c < V.size(); ++c)
        if (v[c] != 0) r[Vi.at(permute_copies(V[c], sigma, n))] = v[c];
      return r;
    };
    size_t qd = qbasis.size();
    conormal.dims.push_back(qd);
    conormal.action.emplace_back();
    for (size_t g = 0; g < S->order(); ++g) {
      MatQ M(qd, std::vector<Rat>(qd, 0));
      for (size_t k = 0; k < qd; ++k) {
        auto c = quotient_coords(act_vec(qbasis[k], S->element(g)));
        for (size_t r = 0; r < qd; ++r) M[r][k] = c[r];
      }
      conormal.action.back().push_back(std::move(M));
    }
    // Omega (x) H: b dx_a (x) ([h] - [h+1]) with b of degree d - 1
    auto Bprev = B.basis(d - 1);
    size_t hd = l > 1 ? static_cast<size_t>(l - 1) : 0;
    size_t od = Bprev.size() * n * hd;
    auto oindex = [&](size_t b, int a, size_t h) { return (b * n + a) * hd + h; };
    omega.dims.push_back(od);
    omega.action.emplace_back();
    for (size_t g = 0; g < S->order(); ++g) {
      MatQ M(od, std::vector<Rat>(od, 0));
      for (size_t b = 0; b < Bprev.size(); ++b)
        for (int a = 0; a < n; ++a)
          for (size_t h = 0; h < hd; ++h) {
            auto img = h_image(S->element(g), static_cast<int>(h), l);
            for (size_t t = 0; t < hd; ++t) M[oindex(b, a, t)][oindex(b, a, h)] = img[t];
          }
      omega.action.back().push_back(std::move(M));
    }
    // alpha: b dx_a (x) ([h]-[h+1]) -> b in copy 0 times (x_{a,h} - x_{a,h+1})
    MatQ alpha(qd, std::vector<Rat>(od, 0));
    for (size_t b = 0; b < Bprev.size(); ++b)
      for (int a = 0; a < n; ++a)
        for (size_t h = 0; h < hd; ++h) {
          Monomial lifted(N, 0);
          for (int v = 0; v < n; ++v) lifted[v] = Bprev[b][v];
          auto c = quotient_coords(to_vec(gpoly_mul(gpoly_monomial(lifted), gens[h * n + a])));
          for (size_t r = 0; r < qd; ++r) alpha[r][oindex(b, a, h)] = c[r];
        }
    ConormalDegree cd;
    cd.degree = d;
    cd.conormal_dim = qd;
    cd.omega_h_dim = od;
    cd.conormal_character = conormal.character(d);
    cd.omega_h_character = omega.character(d);
    cd.alpha_bijective = qd == od && rank_over_field(alpha, {}) == qd;
    cd.alpha_equivariant = true;
    for (size_t g = 0; g < S->order() && cd.alpha_equivariant; ++g)
      if (mat_mul(alpha, omega.action[d][g], od) != mat_mul(conormal.action[d][g], alpha, od)) cd.alpha_equivariant = false;
    cd.match = qd == od && cd.conormal_character == cd.omega_h_character;
    rep.degrees.push_back(std::move(cd));
  }
  rep.relations_ok = conormal.satisfies_relations() && omega.satisfies_relations();
  return rep;
}

// ------------------------------------------------------------------ invariant sections

namespace {

// Monomials of S_{deg}^{(x) l} for S = k[x_0..x_r], copy-major.
std::vector<Monomial> segre_basis(int nv, long l, int deg) {
  GradedAlgebra S(nv);
  auto one = S.basis(deg);
  std::vector<Monomial> out{Monomial{}};
  for (long i = 0; i < l; ++i) {
    std::vector<Monomial> next;
    for (const auto& pre : out)
      for (const auto& m : one) {
        Monomial x = pre;
        x.insert(x.end(), m.begin(), m.end());
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

Monomial content(const Monomial& m, int nv) {
  Monomial c(nv, 0);
  for (size_t k = 0; k < m.size(); ++k) c[k % nv] += m[k];
  return c;
}

// Content-graded target blocks: monomials grouped by total exponent of each variable.
struct Blocks {
  std::map<Monomial, std::vector<Monomial>> members;
  std::map<Monomial, size_t> position;  // monomial -> index within its block
};

Blocks make_blocks(const std::vector<Monomial>& mons, int nv) {
  Blocks b;
  for (const auto& m : mons) {
    auto& v = b.members[content(m, nv)];
    b.position[m] = v.size();
    v.push_back(m);
  }
  return b;
}

std::string tensor_monomial_str(const Monomial& m, int nv, long l) {
  std::ostringstream os;
  for (long i = 0; i < l; ++i) {
    if (i) os << " (x) ";
    Monomial part(m.begin() + i * nv, m.begin() + (i + 1) * nv);
    os << monomial_str(part, "x", 0);
  }
  return os.str();
}

std::string section_str(const std::map<std::vector<int>, Int>& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : s) {
    if (!first) os << " + ";
    if (c != 1) os << c.get_str() << "*";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "(x)" : "") << "x" << t[i];
    first = false;
  }
  return os.str();
}

}  // namespace

InvariantSectionsResult invariant_sections_generate(int r, long l, int bound, FieldDescriptor k) {
  if (r < 0 || r > 4 || l < 1 || l > 4 || bound < 1) throw DomainError("need 0 <= r <= 4, 1 <= l <= 4, bound >= 1");
  int nv = r + 1;
  InvariantSectionsResult res;
  res.r = r;
  res.l = l;
  res.bound = bound;
  // support type per factor: the set of nonvanishing coordinates at the point
  unsigned nmask = (1u << nv) - 1;
  std::vector<unsigned> types(l, 1);
  auto already = [&](const std::map<std::vector<int>, Int>& s) {
    return std::find(res.sections.begin(), res.sections.end(), s) != res.sections.end();
  };
  while (true) {
    std::vector<bool> covered(l, false);
    std::vector<int> coord(l, -1);
    size_t ncov = 0;
    while (ncov < static_cast<size_t>(l)) {
      bool chosen = false;
      for (int x = 0; x < nv && !chosen; ++x) {
        for (long i = 0; i < l; ++i)
          if (!covered[i] && (types[i] >> x & 1)) {
            covered[i] = true;
            coord[i] = x;
            ++ncov;
            chosen = true;
          }
      }
      if (!chosen) throw InvariantViolation("no section is nonzero at the remaining factors");
    }
    // sum over Sigma_l / Sigma(M_1..M_N) = every distinct arrangement of the coordinate tuple
    std::map<std::vector<int>, Int> s;
    std::vector<int> t = coord;
    std::sort(t.begin(), t.end());
    do s[t] = 1;
    while (std::next_permutation(t.begin(), t.end()));
    if (!already(s)) res.sections.push_back(std::move(s));
    long pos = 0;
    while (pos < l && types[pos] == nmask) types[pos++] = 1;
    if (pos == l) break;
    types[pos]++;
  }
  for (const auto& s : res.sections) res.section_strs.push_back(section_str(s));
  GroupPtr S = FiniteGroup::symmetric(static_cast<int>(l));
  res.invariant = true;
  for (const auto& s : res.sections)
    for (const auto& sigma : S->elements()) {
      std::map<std::vector<int>, Int> moved;
      for (const auto& [t, c] : s) {
        std::vector<int> u(l);
        for (long i = 0; i < l; ++i) u[sigma[i]] = t[i];
        moved[u] = c;
      }
      if (moved != s) res.invariant = false;
    }
  for (int N = 1; N <= bound; ++N) {
    Blocks target = make_blocks(segre_basis(nv, l, N), nv);
    std::map<Monomial, IncrementalRank> span;
    for (const auto& [c, mem] : target.members) span.emplace(c, IncrementalRank(mem.size(), k));
    auto lower = segre_basis(nv, l, N - 1);
    for (const auto& s : res.sections) {
      Monomial sc(nv, 0);
      for (int x : s.begin()->first) sc[x]++;
      for (const auto& m : lower) {
        Monomial c = content(m, nv);
        for (int v = 0; v < nv; ++v) c[v] += sc[v];
        auto& R = span.at(c);
        if (R.rank() == R.ncols()) continue;
        std::vector<Rat> row(R.ncols(), 0);
        for (const auto& [t, coef] : s) {
          Monomial prod = m;
          for (long i = 0; i < l; ++i) prod[i * nv + t[i]]++;
          row[target.position.at(prod)] += Rat(coef);
        }
        R.add(row);
      }
    }
    bool full = true;
    for (const auto& [c, R] : span)
      if (R.rank() != R.ncols()) {
        full = false;
        if (N == bound && res.failing_monomial.empty()) {
          const auto& mem = target.members.at(c);
          for (size_t j = 0; j < mem.size(); ++j) {
            std::vector<Rat> e(mem.size(), 0);
            e[j] = 1;
            if (!R.contains(e)) {
              res.failing_monomial = tensor_monomial_str(mem[j], nv, l);
              break;
            }
          }
        }
      }
    if (full) {
      res.certified = true;
      res.certified_at = N;
      break;
    }
  }
  return res;
}

// ------------------------------------------------------------------ alpha epimorphisms

AlphaResult alpha_surjective(AlphaMode mode, int vars, long l, int bound, FieldDescriptor k) {
  if (vars < 0 || l < 1 || l > 4 || bound < 0) throw DomainError("need vars >= 0, 1 <= l <= 4, bound >= 0");
  if (mode == AlphaMode::Affine && vars < 1) throw DomainError("affine mode needs at least one generator");
  AlphaResult res;
  res.mode = mode;
  res.vars = vars;
  res.l = l;
  res.bound = bound;
  int nv = mode == AlphaMode::Projective ? vars + 1 : vars;
  GroupPtr S = FiniteGroup::symmetric(static_cast<int>(l));
  // generators of the source: pairs (first, second) of monomials in the degree-one piece, alpha([i]-[i+1])
  std::vector<std::pair<Monomial, Monomial>> gens;
  res.compatible = true;
  if (mode == AlphaMode::Projective) {
    Perm c(l);
    for (long i = 0; i < l; ++i) c[i] = static_cast<int>((i + 1) % l);
    auto tuple_mono = [&](const std::vector<int>& t) {
      Monomial m(l * nv, 0);
      for (long i = 0; i < l; ++i) m[i * nv + t[i]] = 1;
      return m;
    };
    auto rotate = [&](const std::vector<int>& t, long times) {
      std::vector<int> u = t;
      for (long s = 0; s < times; ++s) {
        std::vector<int> w(l);
        for (long i = 0; i < l; ++i) w[c[i]] = u[i];
        u = w;
      }
      return u;
    };
    std::vector<int> j(l, 0);
    while (true) {
      // alpha_j([i]) = c^i x_j, and c [i] = [i+1]
      for (long i = 1; i <= l; ++i)
        if (tuple_mono(rotate(j, i + 1)) != permute_copies(tuple_mono(rotate(j, i)), c, nv)) res.compatible = false;
      for (long i = 1; i < l; ++i) gens.push_back({tuple_mono(rotate(j, i)), tuple_mono(rotate(j, i + 1))});
      long p = 0;
      while (p < l && j[p] == nv - 1) j[p++] = 0;
      if (p == l) break;
      j[p]++;
    }
  } else {
    auto var_mono = [&](int a, long i) {
      Monomial m(l * nv, 0);
      m[i * nv + a] = 1;
      return m;
    };
    for (int a = 0; a < nv; ++a) {
      // alpha_a([i]) = x_a in copy i; sigma [i] = [sigma(i)]
      for (const auto& sigma : S->elements())
        for (long i = 0; i < l; ++i)
          if (var_mono(a, sigma[i]) != permute_copies(var_mono(a, i), sigma, nv)) res.compatible = false;
      for (long i = 0; i + 1 < l; ++i) gens.push_back({var_mono(a, i), var_mono(a, i + 1)});
    }
  }
  for (int d = 0; d <= bound; ++d) {
    std::vector<Monomial> top, lower;
    if (mode == AlphaMode::Projective) {
      top = segre_basis(nv, l, d);
      if (d >= 1) lower = segre_basis(nv, l, d - 1);
    } else {
      GradedAlgebra T(static_cast<int>(l) * nv);
      top = T.basis(d);
      lower = T.basis(d - 1);
    }
    Blocks target = make_blocks(top, nv);
    size_t ideal = 0;
    std::map<Monomial, IncrementalRank> span;
    for (const auto& [c, mem] : target.members) {
      ideal += mem.size() - 1;
      span.emplace(c, IncrementalRank(mem.size(), k));
    }
    for (const auto& m : lower) {
      Monomial mc = content(m, nv);
      for (const auto& [g1, g2] : gens) {
        if (g1 == g2) continue;
        Monomial c = mc;
        Monomial gc = content(g1, nv);
        for (int v = 0; v < nv; ++v) c[v] += gc[v];
        auto& R = span.at(c);
        if (R.rank() + 1 == R.ncols()) continue;
        Monomial p1 = m, p2 = m;
        for (size_t v = 0; v < m.size(); ++v) {
          p1[v] += g1[v];
          p2[v] += g2[v];
        }
        std::vector<Rat> row(R.ncols(), 0);
        row[target.position.at(p1)] += 1;
        row[target.position.at(p2)] -= 1;
        R.add(row);
      }
    }
    size_t image = 0;
    for (const auto& [c, R] : span) image += R.rank();
    res.ideal_dims.push_back(ideal);
    res.cokernel_dims.push_back(ideal - image);
  }
  res.surjective_from = -1;
  for (int d = bound; d >= 0 && res.cokernel_dims[d] == 0; --d) res.surjective_from = d;
  res.surjective = res.surjective_from >= 0;
  return res;
}

}  // namespace tpow
