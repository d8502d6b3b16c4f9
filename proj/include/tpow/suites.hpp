#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpow {

inline constexpr const char* kArtifactVersion = "tpow 1.0.0";

// Bad suite name or parameter; the CLI maps it to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string left, right;
  std::optional<std::string> witness;
};

struct Report {
  std::string suite;
  std::string anchor;
  std::map<std::string, std::string> params;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;
  std::string version = kArtifactVersion;

  bool all_pass() const;
  size_t failures() const;
  void add(std::string name, bool pass, std::string left = {}, std::string right = {},
           std::optional<std::string> witness = std::nullopt);
};

std::string report_json(const Report& r, bool with_timing = true);
std::string reports_json(const std::vector<Report>& rs, bool with_timing = true);
std::string report_text(const Report& r, bool with_timing = true);

// Integer parameter in [min, max], or a string parameter when choices is nonempty.
struct ParamSpec {
  ParamSpec(std::string k, long lo, long hi, std::string d, std::vector<std::string> c = {})
      : key(std::move(k)), min(lo), max(hi), doc(std::move(d)), choices(std::move(c)) {}
  std::string key;
  long min = 0, max = 0;
  std::string doc;
  std::vector<std::string> choices;
};

struct SuiteConfig {
  std::string suite;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 1;
  std::optional<long> bound;
};

// Validated integer parameters; a key that was not given falls back to the suite grid.
class Params {
 public:
  Params(const std::vector<ParamSpec>& schema, const SuiteConfig& cfg);
  bool has(const std::string& key) const { return given_.count(key) > 0 || given_str_.count(key) > 0; }
  long get(const std::string& key, long fallback) const;
  // {value} when given, otherwise the grid.
  std::vector<long> values(const std::string& key, std::vector<long> grid) const;
  std::vector<std::string> choices(const std::string& key, std::vector<std::string> grid) const;
  std::uint64_t seed() const { return seed_; }
  std::map<std::string, std::string>& resolved() { return resolved_; }
  // Records the values used for the report.
  std::vector<long> resolve(const std::string& key, std::vector<long> grid);
  long resolve_one(const std::string& key, long fallback);
  std::vector<std::string> resolve_choices(const std::string& key, std::vector<std::string> grid);

 private:
  std::map<std::string, long> given_;
  std::map<std::string, std::string> given_str_;
  std::uint64_t seed_;
  std::map<std::string, std::string> resolved_;
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
  std::string description;
  std::vector<ParamSpec> schema;
  std::function<void(Params&, Report&)> run;
};

// Stable order.
const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

// Throws ConfigError for unknown suites and schema violations; InvariantViolation
// propagates when two independent computations disagree.
Report run_suite(const SuiteConfig& cfg);
// Runs in a worker pool; the result order follows the input order.
std::vector<Report> run_suites(const std::vector<SuiteConfig>& cfgs, unsigned workers = 0);

}  // namespace tpow
