#include "twobraid/report.hpp"

#include <sstream>

#include "json.hpp"

namespace twobraid {

bool SuiteReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (c.status != "pass") return false;
  return true;
}

UnOracle resolved_oracle(const SuiteConfig& cfg) {
  if (cfg.oracle == "rewrite") return UnOracle::kRewrite;
  if (cfg.oracle == "span") return UnOracle::kSpan;
  if (cfg.oracle == "both") return UnOracle::kBoth;
  if (cfg.oracle.empty())
    return cfg.n <= 3 ? UnOracle::kBoth : UnOracle::kRewrite;
  throw std::invalid_argument("unknown oracle mode: " + cfg.oracle);
}

std::string oracle_name(UnOracle mode) {
  switch (mode) {
    case UnOracle::kRewrite:
      return "rewrite";
    case UnOracle::kSpan:
      return "span";
    case UnOracle::kBoth:
      return "both";
  }
  return "both";
}

namespace {

nlohmann::ordered_json config_json(const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  j["degree_bound"] = cfg.degree_bound;
  j["n"] = cfg.n;
  j["c"] = rational_to_string(cfg.c);
  j["seed"] = cfg.seed;
  j["oracle"] = oracle_name(resolved_oracle(cfg));
  j["model"] = cfg.model_path.empty() ? "string" : cfg.model_path;
  j["timings"] = cfg.timings;
  return j;
}

}  // namespace

std::string to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  j["config"] = config_json(r.config);
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["ref"] = c.ref;
    e["status"] = c.status;
    e["defect_term_count"] = c.defect_term_count;
    e["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(e));
  }
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  out << "config: degree_bound=" << r.config.degree_bound
      << " n=" << r.config.n << " c=" << rational_to_string(r.config.c)
      << " seed=" << r.config.seed
      << " oracle=" << oracle_name(resolved_oracle(r.config)) << " model="
      << (r.config.model_path.empty() ? "string" : r.config.model_path)
      << "\n";
  for (const CheckResult& c : r.checks) {
    out << "  [" << c.status << "] " << c.id
        << " defect_terms=" << c.defect_term_count;
    if (r.config.timings) out << " elapsed_ms=" << c.elapsed_ms;
    out << "  # " << c.ref << "\n";
  }
  out << "result: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace twobraid
