#include "tpow/suites.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "suite_impl.hpp"
#include "tpow/characters.hpp"
#include "tpow/koszul.hpp"
#include "tpow/lambda.hpp"
#include "tpow/linalg.hpp"

namespace tpow {

// ------------------------------------------------------------------ reports

bool Report::all_pass() const { return failures() == 0; }

size_t Report::failures() const {
  size_t f = 0;
  for (const auto& c : checks) f += !c.pass;
  return f;
}

void Report::add(std::string name, bool pass, std::string left, std::string right, std::optional<std::string> witness) {
  checks.push_back({std::move(name), pass, std::move(left), std::move(right), std::move(witness)});
}

namespace {

nlohmann::ordered_json to_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["parameters"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["left"] = c.left;
    cj["right"] = c.right;
    if (c.witness) cj["witness"] = *c.witness;
    j["checks"].push_back(cj);
  }
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  j["version"] = r.version;
  return j;
}

}  // namespace

std::string report_json(const Report& r, bool with_timing) { return to_json(r, with_timing).dump(2); }

std::string reports_json(const std::vector<Report>& rs, bool with_timing) {
  if (rs.size() == 1) return report_json(rs[0], with_timing);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r, with_timing));
  return arr.dump(2);
}

std::string report_text(const Report& r, bool with_timing) {
  std::ostringstream os;
  os << "suite " << r.suite << " (" << r.anchor << ")\n";
  os << "parameters:";
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.left.empty() || !c.right.empty()) os << "\n        left:  " << c.left << "\n        right: " << c.right;
    if (c.witness) os << "\n        witness: " << *c.witness;
    os << "\n";
  }
  os << "summary: " << r.checks.size() - r.failures() << " passed, " << r.failures() << " failed";
  if (with_timing) os << ", " << r.elapsed_ms << " ms";
  os << ", " << r.version << "\n";
  return os.str();
}

// ------------------------------------------------------------------ parameters

Params::Params(const std::vector<ParamSpec>& schema, const SuiteConfig& cfg) : seed_(cfg.seed) {
  auto spec_of = [&](const std::string& key) -> const ParamSpec* {
    for (const auto& s : schema)
      if (s.key == key) return &s;
    return nullptr;
  };
  auto set = [&](const std::string& key, const std::string& text) {
    const ParamSpec* s = spec_of(key);
    if (!s) throw ConfigError("unknown parameter '" + key + "' for suite " + cfg.suite);
    if (!s->choices.empty()) {
      if (std::find(s->choices.begin(), s->choices.end(), text) == s->choices.end())
        throw ConfigError("parameter " + key + " must be one of " + suites::join(s->choices));
      given_str_[key] = text;
      return;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ConfigError("parameter " + key + " needs an integer, got '" + text + "'");
    if (v < s->min || v > s->max)
      throw ConfigError("parameter " + key + " = " + text + " outside [" + std::to_string(s->min) + ", " +
                        std::to_string(s->max) + "]");
    given_[key] = v;
  };
  for (const auto& [k, v] : cfg.params) set(k, v);
  if (cfg.bound) {
    if (!spec_of("D")) throw ConfigError("suite " + cfg.suite + " takes no degree bound");
    set("D", std::to_string(*cfg.bound));
  }
}

long Params::get(const std::string& key, long fallback) const {
  auto it = given_.find(key);
  return it == given_.end() ? fallback : it->second;
}

std::vector<long> Params::values(const std::string& key, std::vector<long> grid) const {
  auto it = given_.find(key);
  if (it == given_.end()) return grid;
  return {it->second};
}

std::vector<std::string> Params::choices(const std::string& key, std::vector<std::string> grid) const {
  auto it = given_str_.find(key);
  if (it == given_str_.end()) return grid;
  return {it->second};
}

std::vector<long> Params::resolve(const std::string& key, std::vector<long> grid) {
  auto v = values(key, std::move(grid));
  resolved_[key] = suites::join(v);
  return v;
}

long Params::resolve_one(const std::string& key, long fallback) {
  long v = get(key, fallback);
  resolved_[key] = std::to_string(v);
  return v;
}

std::vector<std::string> Params::resolve_choices(const std::string& key, std::vector<std::string> grid) {
  auto v = choices(key, std::move(grid));
  resolved_[key] = suites::join(v);
  return v;
}

// ------------------------------------------------------------------ registry

const std::vector<SuiteInfo>& suite_registry() {
  using namespace suites;
  static const std::vector<SuiteInfo> reg = {
      {"character-tables", "symmetric-group character tables: orthogonality and Young's rule",
       "tables of S_l pass both orthogonality relations and match fixed-tabloid traces",
       {{"l", 1, 7, "degree of the symmetric group (grid 1..6)"}}, character_tables},
      {"equivariant-binomial", "equivariant binomial theorem for tensor powers of virtual classes",
       "all tau routes agree on a seeded corpus over P^n",
       {{"l", 1, 5, "tensor power (grid 1..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "number of seeded classes (default 204)"}},
       equivariant_binomial},
      {"tau-mult", "multiplicativity of the tensor power operation", "tau^l(xy) = tau^l(x) tau^l(y)",
       {{"l", 1, 5, "tensor power (grid 1..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "pairs per (l, n) (default 6)"}},
       tau_mult},
      {"tau-negation", "tensor power of a negative class is the sign-twisted power",
       "tau^l(-F) = (-1)^l sgn tau^l(F)",
       {{"l", 1, 5, "tensor power (grid 1..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "genuine classes per (l, n) (default 4)"}},
       tau_negation},
      {"tau-restriction", "restriction of tensor powers to Young subgroups",
       "Res tau^l(x) = tau^i(x) (x) tau^{l-i}(x) on S_i x S_{l-i}",
       {{"l", 2, 5, "tensor power (grid 2..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "classes per (l, n) (default 4)"}},
       tau_restriction},
      {"lambda-bott", "lambda_{-1} of twisted classes and the Bott element congruence",
       "tau^l(lambda_{-1} F) = lambda_{-1}(F O[I_l]) = lambda_{-1}(F H) lambda_{-1}(F); theta^l(F) - lambda_{-1}(F H) in the "
       "exterior power ideal",
       {{"l", 1, 4, "tensor power (grid 1..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "line sums per (l, n) (default 4)"}},
       lambda_bott},
      {"adams-congruence", "tensor power congruent to the Adams operation modulo the regular ideal",
       "tau^l(x) - psi^l(x) lies in ([O[I_l]]) over C_l, with witness",
       {{"l", 2, 7, "prime (grid 2, 3, 5)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"corpus", 1, 5000, "classes per (l, n) (default 8)"}},
       adams_congruence},
      {"k1-tensor", "tensor power on K_1 of a field with an l-th root of unity",
       "tau^l(beta) restricted to C_l has exponents (l-1, -1, ..., -1)",
       {{"l", 2, 11, "prime (grid 2, 3, 5, 7)"}}, k1_tensor},
      {"binomial-identity", "alternating binomial sum equals -1",
       "sum_{i=1}^{l-1} (-1)^{l-i} binomial(l,i) i / l = -1 for prime l",
       {{"l", 2, 97, "prime (grid: primes up to 13)"}}, binomial_identity},
      {"kunneth", "Kunneth formula for push-forward of external tensor powers",
       "f^l_* tau^l(O(m)) = tau^l(f_* O(m)), plus explicit matrix-trace oracle",
       {{"l", 1, 5, "tensor power (grid 1..4)"}, {"n", 0, 3, "projective dimension (grid 0..2)"},
        {"m", 0, 5, "twist (grid 0..3)"}},
       kunneth},
      {"closed-immersion-rr", "Riemann-Roch for the zero section with the conormal twist",
       "tau^l(i_* y) = i_*(lambda_{-1}(n H) tau^l(y))",
       {{"l", 1, 5, "tensor power (grid 1..4)"}, {"n", 0, 4, "projective dimension (grid 0..3)"},
        {"y", -5, 5, "integer class on the point (grid -2..2)"}},
       closed_immersion_rr},
      {"arr", "Adams-Riemann-Roch for projective space over the point",
       "psi^l f_*(h^m) = f_*(theta^l(Omega)^{-1} psi^l(h^m)) in Z[1/l], and the tau form modulo the regular ideal",
       {{"l", 2, 7, "prime (grid 2, 3)"}, {"n", 0, 4, "projective dimension (grid 0..3)"},
        {"m", -4, 4, "twist (grid -3..3)"}},
       arr},
      {"ideal-structure", "structure of the regular ideal in R(C_l) and K_0 splittings",
       "exterior powers of O[I_l] are free, quotients Z/p and Z[zeta_l], injectivity splittings",
       {{"l", 2, 11, "prime (grid 2, 3, 5, 7)"}, {"corpus", 1, 5000, "seeded elements per prime (default 24)"}},
       ideal_structure},
      {"gbundle-rr", "tensor-power Riemann-Roch for equivariant bundles on finite G-sets and induction",
       "tau^l(f_* E) - f_*(tau^l E) in (reg(C_l) (x) 1), decomposition and enumeration agree; psi^l Ind = Ind psi^l",
       {{"l", 2, 7, "prime not dividing |G| (grid: all such l <= 5)"},
        {"group", 0, 0, "G (grid C3, C4, S3)", {"C3", "C4", "S3"}}},
       gbundle_rr},
      {"koszul", "Koszul homology, diagonal conormal module, invariant sections and alpha epimorphisms",
       "homology against the exterior-power oracle, conormal characters, generation and surjectivity certificates",
       {{"D", 1, 6, "degree bound (default 5 for homology, capped at 3 or 4 elsewhere)"},
        {"l", 1, 3, "tensor power (grid 1..3)"},
        {"r", 0, 2, "projective dimension for sections and alpha (grid 0..2)"},
        {"p", 0, 101, "field characteristic for rank computations, 0 = Q (default 0)"}},
       koszul},
      {"charp", "characteristic-p symmetric identities and the inverse Bott element",
       "prod(1 - x_i^p) = prod(1 - x_i) prod(1 + ... + x_i^{p-1}); theta^2(Omega)^{-1} = (3 - Omega)/4",
       {{"n", 1, 4, "number of line variables (grid 1..3)"}, {"p", 2, 7, "prime (grid 2, 3, 5)"}}, charp},
  };
  return reg;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

Report run_suite(const SuiteConfig& cfg) {
  const SuiteInfo* info = find_suite(cfg.suite);
  if (!info) throw ConfigError("unknown suite '" + cfg.suite + "'");
  Params p(info->schema, cfg);
  Report r;
  r.suite = info->name;
  r.anchor = info->anchor;
  auto t0 = std::chrono::steady_clock::now();
  info->run(p, r);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  r.params = p.resolved();
  r.params["seed"] = std::to_string(p.seed());
  return r;
}

std::vector<Report> run_suites(const std::vector<SuiteConfig>& cfgs, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<size_t>(cfgs.size(), 1)));
  std::vector<Report> out(cfgs.size());
  std::vector<std::exception_ptr> errors(cfgs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < cfgs.size();) {
      try {
        out[i] = run_suite(cfgs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ------------------------------------------------------------------ shared helpers

namespace suites {

HPoly Corpus::hpoly(int max_terms, long max_exp, long max_coeff) {
  HPoly p;
  int terms = static_cast<int>(draw(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    long m = draw(-max_exp, max_exp);
    long c = draw(1, max_coeff) * (draw(0, 1) ? 1 : -1);
    p[m] += c;
    if (p[m] == 0) p.erase(m);
  }
  return p;
}

HPoly Corpus::genuine(int max_rank, long max_exp) {
  HPoly p;
  int rank = static_cast<int>(draw(1, max_rank));
  for (int t = 0; t < rank; ++t) p[draw(-max_exp, max_exp)] += 1;
  return p;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

namespace {

std::string table_str(const std::vector<ClassFunction>& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + t[i].str();
  return s;
}

std::string ints_str(const std::vector<size_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

void character_tables(Params& p, Report& r) {
  for (long l : p.resolve("l", {1, 2, 3, 4, 5, 6})) {
    auto G = FiniteGroup::symmetric(static_cast<int>(l));
    auto t = character_table(G);
    bool ortho = true;
    try {
      validate_orthogonality(*t);
    } catch (const InvariantViolation&) {
      ortho = false;
    }
    r.add("S" + std::to_string(l) + " row and column orthogonality", ortho, std::to_string(t->size()) + " irreducibles",
          std::to_string(G->num_classes()) + " classes");
    if (l > 5) continue;
    auto brute = young_rule_characters(static_cast<int>(l));
    auto parts = partitions(static_cast<int>(l));
    std::vector<ClassFunction> mn;
    for (const auto& lam : parts) mn.push_back(t->irreducibles[t->index_of_partition(lam)]);
    r.add("S" + std::to_string(l) + " table equals fixed-tabloid traces through Young's rule", mn == brute,
          table_str(mn), table_str(brute));
  }
}

void ideal_structure(Params& p, Report& r) {
  auto primes = p.resolve("l", {2, 3, 5, 7});
  long corpus = p.resolve_one("corpus", 24);
  Corpus rng(p.seed());
  for (long l : primes) {
    if (!is_prime(l)) throw ConfigError("l must be prime");
    auto C = FiniteGroup::cyclic(static_cast<int>(l));
    ClassFunction reg = regular_character(C);
    auto lam = exterior_powers(permutation_character(C), l);
    for (long i = 1; i < l; ++i) {
      Rat rank(binomial(l, i), Int(l));
      rank.canonicalize();
      auto m = ideal_membership(lam[i], {reg});
      bool free = lam[i] == reg * Cyclotomic(rank) && m.member;
      r.add("exterior power " + std::to_string(i) + " of O[I_" + std::to_string(l) + "] is free over C_" + std::to_string(l),
            free, lam[i].str(), to_string(rank) + " * " + reg.str(),
            m.member ? std::optional<std::string>(m.multipliers[0].str()) : std::nullopt);
    }
    // Z[zeta_l] quotient: kernel of t -> zeta equals the ideal
    auto table = character_table(C);
    r.add("regular character maps to zero in Z[zeta_" + std::to_string(l) + "]", quotient_to_cyclotomic(reg).is_zero(),
          quotient_to_cyclotomic(reg).str(), "0");
    long agree = 0, in_kernel = 0;
    for (long s = 0; s < corpus; ++s) {
      std::vector<Int> mult(table->size());
      bool make_member = rng.draw(0, 1);
      long c = rng.draw(-3, 3);
      for (auto& x : mult) x = make_member ? Int(c) : Int(rng.draw(-3, 3));
      ClassFunction x = table->combine(mult);
      bool kernel = quotient_to_cyclotomic(x).is_zero();
      bool member = ideal_membership(x, {reg}).member;
      agree += kernel == member;
      in_kernel += kernel;
    }
    r.add("kernel of R(C_" + std::to_string(l) + ") -> Z[zeta] equals ([regular]) on seeded elements", agree == corpus,
          std::to_string(agree) + "/" + std::to_string(corpus) + " agree", std::to_string(corpus) + "/" + std::to_string(corpus),
          std::to_string(in_kernel) + " kernel elements");
    // K_0 of P^n splittings over C_l
    ClassFunction H = reg - trivial_character(C);
    for (int n = 0; n <= 2; ++n) {
      KClassPn y = KClassPn::from_hpoly(n, rng.hpoly(3, 2, 3));
      if (y.is_zero()) y = KClassPn::constant(n, 1);
      EqKClass base = EqKClass::from_base(C, y);
      EqKClass hy = EqKClass::tensor(H, y);
      bool fixed_split = base.trivial_projection() == y && hy.trivial_projection().is_zero();
      r.add("fixed-point projection splits K_0(P^" + std::to_string(n) + ") and kills [H] y, l=" + std::to_string(l),
            fixed_split, base.trivial_projection().str() + " ; " + hy.trivial_projection().str(), y.str() + " ; 0");
      auto mat = hy.matrix();
      bool nontrivial = true;
      for (size_t a = 0; a < table->size(); ++a) {
        if (table->irreducibles[a] == trivial_character(C)) continue;
        if (mat[a] != y.coeffs()) nontrivial = false;
      }
      r.add("each nontrivial isotypic projection is left inverse to y -> [H] y on P^" + std::to_string(n) + ", l=" +
                std::to_string(l),
            nontrivial, "projections of " + hy.str(), y.str());
      auto mem = eq_ideal_membership(base, {EqKClass::from_character(reg, n)});
      r.add("K_0(P^" + std::to_string(n) + ") -> K_0(C_" + std::to_string(l) + ", P^" + std::to_string(n) +
                ")/(reg) is injective on " + y.str(),
            !mem.member, mem.member ? "member" : "not a member", "not a member");
    }
    bool frob = true;
    for (const auto& chi : table->irreducibles)
      if (reg * chi != reg * chi.dimension()) frob = false;
    r.add("[O[C_" + std::to_string(l) + "]] R(C_l) = [O[C_l]] Z by Frobenius reciprocity", frob, "reg * chi", "dim(chi) * reg");
  }
  for (long q : {2L, 3L, 5L}) {
    Int order = smith_normal_form(MatZ{{Int(q)}}).diagonal()[0];
    bool ok = order == q && modular_dimension_quotient(q, q) == 0 && modular_dimension_quotient(1, q) == 1 &&
              modular_dimension_quotient(2, q) == 2 % q;
    r.add("K_0(C_" + std::to_string(q) + ", F_" + std::to_string(q) + ")/([F_p[C_p]]) has order " + std::to_string(q), ok,
          "order " + order.get_str() + ", [F_p[C_p]] -> " + std::to_string(modular_dimension_quotient(q, q)),
          "order " + std::to_string(q) + ", [F_p[C_p]] -> 0");
  }
}

void charp(Params& p, Report& r) {
  auto ns = p.resolve("n", {1, 2, 3});
  auto ps = p.resolve("p", {2, 3, 5});
  for (long q : ps)
    if (!is_prime(q)) throw ConfigError("p must be prime");
  for (long n : ns)
    for (long q : ps)
      r.add("prod(1 - x^p) = prod(1 - x) prod(1 + ... + x^{p-1}), n=" + std::to_string(n) + ", p=" + std::to_string(q),
            cartier_identity_check(static_cast<int>(n), q));
  // line sums on P^n: lambda_{-1}(psi^p F) theta^p(F)^{-1} = lambda_{-1}(F)
  auto triv = FiniteGroup::cyclic(1);
  for (long q : ps)
    for (int n = 1; n <= 2; ++n) {
      HPoly F{{1, 1}, {-1, 1}};
      HPoly Fp{{q, 1}, {-q, 1}};
      auto lf = LineSumClass::from_hpoly(triv, n, F);
      auto lhs = lambda_minus_one(LineSumClass::from_hpoly(triv, n, Fp)) * bott_theta_inverse(lf, q);
      auto rhs = lambda_minus_one(lf);
      r.add("lambda_{-1}(psi^p F) theta^p(F)^{-1} = lambda_{-1}(F) for F = h + h^-1 on P^" + std::to_string(n) +
                ", p=" + std::to_string(q),
            lhs == rhs, lhs.str(), rhs.str());
    }
  for (long q : ps) {
    auto omega = AugmentedTruncated::rank_one(q, "Omega");
    auto theta = bott_theta_rank_one(omega, q);
    auto inv = theta.inverse();
    bool unit = inv * theta == AugmentedTruncated(q, 1);
    r.add("theta^" + std::to_string(q) + "(Omega) times its inverse is 1", unit, (inv * theta).str(), "1");
    if (q == 2) {
      auto expected = (AugmentedTruncated(2, 3) - omega) * Rat(1, 4);
      r.add("theta^2(Omega)^{-1} = (3 - Omega)/4", inv == expected, inv.str(), expected.str());
    }
  }
}

void koszul(Params& p, Report& r) {
  long D = p.resolve_one("D", 5);
  long charac = p.resolve_one("p", 0);
  if (charac && !is_prime(charac)) throw ConfigError("p must be 0 or prime");
  FieldDescriptor k{charac};
  auto ls = p.resolve("l", {1, 2, 3});
  auto rs = p.resolve("r", {0, 1, 2});
  GradedAlgebra A(2, k);
  auto x = gpoly_variable(2, 0), y = gpoly_variable(2, 1);
  struct Example {
    std::string name;
    std::vector<GPoly> gens;
  };
  std::vector<Example> examples = {{"(x, y)", {x, y}},
                                   {"(x, y, x + y)", {x, y, gpoly_add(x, y)}},
                                   {"(1, x)", {gpoly_monomial({0, 0}), x}}};
  for (const auto& ex : examples) {
    auto h = koszul_homology_dimensions(A, ex.gens, static_cast<int>(D));
    auto o = koszul_linear_oracle(A, ex.gens, static_cast<int>(D));
    std::optional<std::string> note;
    if (!o.notes.empty()) note = o.notes[0];
    r.add("Koszul homology of " + ex.name + " over " + k.str() + " up to degree " + std::to_string(D) +
              " equals Lambda^i(E) (x) A/I",
          h.dims == o.dims, h.table_str(), o.table_str(), note);
    r.add("Koszul differentials of " + ex.name + " square to zero", h.dd_zero);
  }
  for (long l = 1; l <= 5; ++l) {
    auto hc = augmentation_homotopy_check(l);
    r.add("contracting homotopy e_0 ^ - on Lambda(O[I_" + std::to_string(l) + "]): hd + dh = id, d^2 = 0",
          hc.homotopy_identity && hc.dd_zero, "ranks " + ints_str(hc.ranks));
  }
  int cd = static_cast<int>(std::min<long>(D, 3));
  for (int n = 1; n <= 2; ++n)
    for (long l : ls) {
      auto rep = diagonal_conormal(n, l, cd);
      std::string left, right;
      for (const auto& d : rep.degrees) {
        left += (d.degree ? " " : "") + std::to_string(d.degree) + ":" + d.conormal_character.str();
        right += (d.degree ? " " : "") + std::to_string(d.degree) + ":" + d.omega_h_character.str();
      }
      r.add("I/I^2 = Omega (x) H with its S_" + std::to_string(l) + " action, B in " + std::to_string(n) +
                " variables, degrees <= " + std::to_string(cd),
            rep.pass(), left, right, "alpha bijective and equivariant in every degree");
    }
  int sb = static_cast<int>(std::min<long>(D, 4));
  for (long rr : rs)
    for (long l : ls) {
      auto s = invariant_sections_generate(static_cast<int>(rr), l, sb, k);
      std::string secs;
      for (size_t i = 0; i < s.section_strs.size() && i < 4; ++i) secs += (i ? "; " : "") + s.section_strs[i];
      if (s.section_strs.size() > 4) secs += "; ...";
      r.add("S_" + std::to_string(l) + "-invariant sections generate O(1)^{(x)" + std::to_string(l) + "} on (P^" +
                std::to_string(rr) + ")^" + std::to_string(l) + " within N <= " + std::to_string(sb),
            s.invariant && s.certified, std::to_string(s.sections.size()) + " sections: " + secs,
            s.certified ? "all monomials of multidegree (N,...,N) in the ideal" : "missing " + s.failing_monomial,
            s.certified ? std::optional<std::string>("minimal N = " + std::to_string(s.certified_at)) : std::nullopt);
    }
  for (long rr : rs)
    for (long l : ls) {
      auto a = alpha_surjective(AlphaMode::Projective, static_cast<int>(rr), l, sb, k);
      r.add("alpha onto I L^{(x)" + std::to_string(l) + "} on (P^" + std::to_string(rr) + ")^" + std::to_string(l) +
                ", degrees <= " + std::to_string(sb),
            a.surjective && a.compatible, "cokernel " + ints_str(a.cokernel_dims), "ideal " + ints_str(a.ideal_dims),
            a.surjective ? std::optional<std::string>("onto from degree " + std::to_string(a.surjective_from))
                         : std::nullopt);
    }
  for (int n = 1; n <= 2; ++n)
    for (long l : ls) {
      auto a = alpha_surjective(AlphaMode::Affine, n, l, sb, k);
      r.add("alpha onto I for B in " + std::to_string(n) + " generators, l=" + std::to_string(l) + ", degrees <= " +
                std::to_string(sb),
            a.surjective && a.surjective_from == 0 && a.compatible, "cokernel " + ints_str(a.cokernel_dims),
            "ideal " + ints_str(a.ideal_dims));
    }
}

}  // namespace suites
}  // namespace tpow
