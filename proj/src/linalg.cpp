#include "tpow/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tpow {

namespace {

MatZ identity(size_t n) {
  MatZ I(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

void row_axpy(MatZ& M, size_t dst, size_t src, const Int& q) {
  if (q == 0) return;
  for (size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}

void col_axpy(MatZ& M, size_t dst, size_t src, const Int& q) {
  if (q == 0) return;
  for (auto& row : M) row[dst] -= q * row[src];
}

void col_swap(MatZ& M, size_t a, size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (size_t i = 0; i < rank; ++i) d.push_back(D[i][i]);
  return d;
}

SmithForm smith_normal_form(const MatZ& A) {
  SmithForm s;
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  s.D = A;
  s.U = identity(m);
  s.V = identity(n);
  MatZ& D = s.D;
  size_t t = 0;
  while (t < std::min(m, n)) {
    // pivot of minimal absolute value
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(D[t], D[pi]);
    std::swap(s.U[t], s.U[pi]);
    col_swap(D, t, pj);
    col_swap(s.V, t, pj);
    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Int q = tdiv(D[i][t], D[t][t]);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D[i][t] != 0) {
          std::swap(D[t], D[i]);
          std::swap(s.U[t], s.U[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Int q = tdiv(D[t][j], D[t][t]);
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) {
          col_swap(D, t, j);
          col_swap(s.V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      bool divisible = true;
      for (size_t i = t + 1; i < m && divisible; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_axpy(D, t, i, Int(-1));
            row_axpy(s.U, t, i, Int(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D[t][t] < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : s.U[t]) v = -v;
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::optional<std::vector<Rat>> solve_integral(const MatZ& A, const std::vector<Rat>& b, long l) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  if (b.size() != m) throw DomainError("solve_integral: size mismatch");
  if (n == 0) {
    for (const auto& v : b)
      if (v != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  SmithForm s = smith_normal_form(A);
  std::vector<Rat> y(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k)
      if (s.U[i][k] != 0) y[i] += Rat(s.U[i][k]) * b[k];
  std::vector<Rat> z(n, 0);
  for (size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      z[i] = y[i] / Rat(s.D[i][i]);
      z[i].canonicalize();
      bool ok = l > 0 ? localized_at_l_check(z[i], l) : z[i].get_den() == 1;
      if (!ok) return std::nullopt;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Rat> w(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < s.rank; ++k)
      if (s.V[i][k] != 0) w[i] += Rat(s.V[i][k]) * z[k];
  return w;
}

MatZ integer_kernel(const MatZ& A) {
  size_t n = A.empty() ? 0 : A[0].size();
  SmithForm s = smith_normal_form(A);
  MatZ ker;
  for (size_t k = s.rank; k < n; ++k) {
    std::vector<Int> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = s.V[i][k];
    ker.push_back(std::move(v));
  }
  return ker;
}

std::vector<size_t> row_reduce(MatQ& m) {
  std::vector<size_t> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank_rational(MatQ m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto red = [p](std::int64_t v) {
    v %= p;
    return v < 0 ? v + p : v;
  };
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
      a = static_cast<std::int64_t>((__int128)a * a % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& v : row) v = red(v);
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    std::int64_t iv = inv(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] = static_cast<std::int64_t>((__int128)m[r][j] * iv % p);
    for (size_t i = r + 1; i < rows; ++i) {
      std::int64_t f = m[i][c];
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        m[i][j] = red(m[i][j] - static_cast<std::int64_t>((__int128)f * m[r][j] % p));
      }
    }
    ++r;
  }
  return r;
}

MatQ kernel_rational(const MatQ& A) {
  MatQ m = A;
  size_t cols = m.empty() ? 0 : m[0].size();
  auto piv = row_reduce(m);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  MatQ ker;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    ker.push_back(std::move(v));
  }
  return ker;
}

std::optional<std::vector<Rat>> solve_rational(const MatQ& A, const std::vector<Rat>& b) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  MatQ aug(rows, std::vector<Rat>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
    aug[i][cols] = b[i];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<Rat> x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

MatQ to_rational(const MatZ& A) {
  MatQ r(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (const auto& v : A[i]) r[i].emplace_back(v);
  return r;
}

MatZ transpose(const MatZ& A) {
  if (A.empty()) return {};
  MatZ t(A[0].size(), std::vector<Int>(A.size()));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j) t[j][i] = A[i][j];
  return t;
}

MatQ transpose(const MatQ& A) {
  if (A.empty()) return {};
  MatQ t(A[0].size(), std::vector<Rat>(A.size()));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j) t[j][i] = A[i][j];
  return t;
}

size_t rank_over(const MatZ& A, std::int64_t p) {
  if (p == 0) return rank_rational(to_rational(A));
  std::vector<std::vector<std::int64_t>> m(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (const auto& v : A[i]) {
      Int r = v % Int(p);
      m[i].push_back(r.get_si());
    }
  return rank_mod_p(std::move(m), p);
}

}  // namespace tpow
