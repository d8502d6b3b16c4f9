#pragma once

#include <random>
#include <string>
#include <vector>

#include "tpow/kclass.hpp"
#include "tpow/suites.hpp"

namespace tpow::suites {

// Seeded corpus source; bounded draws use plain modular reduction so that
// corpora are identical across standard libraries.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}
  long draw(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  // 1..max_terms terms h^m with |m| <= max_exp and 1 <= |c| <= max_coeff.
  HPoly hpoly(int max_terms, long max_exp, long max_coeff);
  // Genuine line sum of rank 1..max_rank with exponents in [-max_exp, max_exp].
  HPoly genuine(int max_rank, long max_exp);

 private:
  std::mt19937_64 rng_;
};

std::string join(const std::vector<long>& v);
std::string join(const std::vector<std::string>& v);

void character_tables(Params& p, Report& r);
void ideal_structure(Params& p, Report& r);
void charp(Params& p, Report& r);
void koszul(Params& p, Report& r);

void equivariant_binomial(Params& p, Report& r);
void tau_mult(Params& p, Report& r);
void tau_negation(Params& p, Report& r);
void tau_restriction(Params& p, Report& r);
void lambda_bott(Params& p, Report& r);
void adams_congruence(Params& p, Report& r);
void kunneth(Params& p, Report& r);
void closed_immersion_rr(Params& p, Report& r);
void arr(Params& p, Report& r);

void gbundle_rr(Params& p, Report& r);
void k1_tensor(Params& p, Report& r);
void binomial_identity(Params& p, Report& r);

}  // namespace tpow::suites
