#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tpow/exact.hpp"

namespace tpow {

using MatZ = std::vector<std::vector<Int>>;
using MatQ = std::vector<std::vector<Rat>>;

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  MatZ U, V, D;
  size_t rank = 0;
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const MatZ& A);

// Solves A w = b for w with integer entries, or entries in Z[1/l] when l > 0.
std::optional<std::vector<Rat>> solve_integral(const MatZ& A, const std::vector<Rat>& b, long l = 0);

// Basis of the integer kernel lattice {w in Z^n : A w = 0}.
MatZ integer_kernel(const MatZ& A);

size_t rank_rational(MatQ m);
size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p);
// Reduces rows to echelon form in place over Q, returning pivot columns.
std::vector<size_t> row_reduce(MatQ& m);
MatQ kernel_rational(const MatQ& A);
std::optional<std::vector<Rat>> solve_rational(const MatQ& A, const std::vector<Rat>& b);

MatQ to_rational(const MatZ& A);
MatZ transpose(const MatZ& A);
MatQ transpose(const MatQ& A);

// Rank of an integer matrix over Q or, when p > 0, over F_p.
size_t rank_over(const MatZ& A, std::int64_t p);

}  // namespace tpow
