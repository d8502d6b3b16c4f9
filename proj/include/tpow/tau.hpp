#pragma once

#include <string>
#include <vector>

#include "tpow/kclass.hpp"

namespace tpow {

enum class TauRoute { Compositions, Binomial, Cross, CyclePsi };

std::string route_name(TauRoute r);
TauRoute parse_route(const std::string& s);
const std::vector<TauRoute>& all_routes();

// b copies of a genuine class, optionally twisted by the sign character of the block.
struct SymbolBlock {
  int size = 0;
  HPoly factor;
  bool sign = false;
  bool operator<(const SymbolBlock& o) const;
  bool operator==(const SymbolBlock& o) const;
};

// mult * Ind from the block subgroup to S_l of the outer product of the blocks.
struct ExternalSymbol {
  long l = 0;
  std::vector<SymbolBlock> blocks;
  Int mult = 1;
  std::string str() const;
};

using SymbolCombination = std::vector<ExternalSymbol>;

// Drops empty blocks and zero terms, sorts blocks, merges equal symbols.
SymbolCombination canonicalize(SymbolCombination s);
std::string symbols_str(const SymbolCombination& s);

// K_0-valued class function of one symbol on P^n, induced to S_l.
EqKClass evaluate_symbol(const ExternalSymbol& s, int n);
EqKClass evaluate_symbols(const SymbolCombination& s, long l, int n);

// tau^l(x) in R(S_l) (x) K_0(P^n); x is split into its positive and negative parts.
EqKClass tau_internal(const HPoly& x, long l, int n, TauRoute route);
// Symbol combination of tau^l(E - F) in the binomial form over the two sign blocks.
SymbolCombination tau_external(const HPoly& x, long l);
// Symbol combination in the composition form (one block of E, any number of F blocks).
SymbolCombination tau_external_compositions(const HPoly& x, long l);

// Push-forward of an external symbol combination on (P^n)^l to the point.
EqKClass kunneth_pushforward(const SymbolCombination& s, long l, int n);

// Ind from S_i x S_j to S_{i+j} of the outer product.
EqKClass cross_product(const EqKClass& a, const EqKClass& b);

// C_l inside S_l, generated by the cycle 0 -> 1 -> ... -> l-1 -> 0.
GroupPtr cyclic_in_symmetric(long l);
// Restriction to a Young subgroup S_i x S_{l-i} or to C_l.
EqKClass restrict_eqk(const EqKClass& x, const GroupPtr& sub);

// w (x) (1 - h^{-1})^n with trivial group action on the Koszul factor.
EqKClass zero_section_pushforward(const EqKClass& w, int n);

// Permutation-action trace of S_l on the l-th tensor power of a sum of lines,
// by enumerating fixed basis tensors; x must be genuine.
EqKClass tensor_power_trace_oracle(const HPoly& x, long l, int n);

// Characters of O[I_l] and of H = O[I_l] - 1 on S_l.
ClassFunction permutation_module_character(long l);
ClassFunction reduced_permutation_character(long l);

}  // namespace tpow
