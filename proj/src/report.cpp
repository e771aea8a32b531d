#include "ffappell/report.hpp"

#include <json.hpp>

namespace ffa {

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = suite_name(r.suite);
  j["p"] = r.p;
  j["r"] = r.r;
  j["q"] = r.q;
  j["mode"] = r.mode == RunMode::exhaustive ? "exhaustive" : "sample";
  j["seed"] = r.seed;
  j["tuples_tested"] = r.tuples_tested;
  j["status"] = r.status();
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json params;
    for (const auto& [name, value] : v.params) params[name] = value;
    viols.push_back({{"params", params}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"diff", v.diff}});
  }
  j["violations"] = viols;
  j["elapsed_s"] = 0.0;
  j["tool_version"] = kToolVersion;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "suite,p,r,q,mode,seed,tuples_tested,status,violations\n";
  for (const VerificationReport& r : reports) {
    out += suite_name(r.suite);
    out += ',' + std::to_string(r.p) + ',' + std::to_string(r.r) + ',' + std::to_string(r.q);
    out += r.mode == RunMode::exhaustive ? ",exhaustive," : ",sample,";
    out += std::to_string(r.seed) + ',' + std::to_string(r.tuples_tested) + ',' + r.status() +
           ',' + std::to_string(r.violation_count) + '\n';
  }
  return out;
}

}  // namespace ffa
