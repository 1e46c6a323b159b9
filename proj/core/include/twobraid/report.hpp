#ifndef TWOBRAID_REPORT_HPP
#define TWOBRAID_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twobraid/rational.hpp"
#include "twobraid/un_space.hpp"

namespace twobraid {

inline constexpr int kReportSchemaVersion = 1;

// One verification check. `ref` names the mathematical identity being
// checked; `defect_term_count` is the number of monomials in the exact
// defect (0 iff status is "pass"), never a float norm. `elapsed_ms` is
// populated only when timings are requested, so default reports are
// byte-identical across runs.
struct CheckResult {
  std::string id;
  std::string ref;
  std::string status;  // "pass" | "fail" | "error"
  std::size_t defect_term_count = 0;
  long long elapsed_ms = 0;
};

struct SuiteConfig {
  int degree_bound = 6;
  int n = 4;
  Rational c = Rational(-2);
  std::uint64_t seed = 0;
  std::string oracle;  // "rewrite" | "span" | "both" | "" (auto by n)
  bool timings = false;
  std::string model_path;  // empty: built-in string model
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Auto rule: "both" for n <= 3, "rewrite" for larger arities.
UnOracle resolved_oracle(const SuiteConfig& cfg);
std::string oracle_name(UnOracle mode);

// Deterministic serializations: identical config + seed give byte-identical
// output (keys in fixed order, exact rationals printed as p/q).
std::string to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace twobraid

#endif
