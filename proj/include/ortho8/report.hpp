// Report serialization.  The JSON schema is versioned and deterministic:
// given the same config and seed, the `results` array is byte-identical
// across runs and worker counts (wall-clock data lives in `meta` only, which
// is excluded from that guarantee).

#ifndef ORTHO8_REPORT_HPP_
#define ORTHO8_REPORT_HPP_

#include <json.hpp>

#include "ortho8/sweep.hpp"

namespace ortho8 {
namespace verify {

inline const char* kReportSchemaVersion = "1";

inline nlohmann::json result_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["status"] = status_name(r.status);
  j["evidence"] = r.evidence;
  j["q"] = r.params.q;
  if (r.params.family) j["family"] = generators::family_name(*r.params.family);
  if (r.params.a_code) j["a"] = *r.params.a_code;
  if (r.params.xi_code) j["xi"] = *r.params.xi_code;
  if (!r.params.branch.empty()) j["branch"] = r.params.branch;
  return j;
}

inline nlohmann::json report_to_json(const SweepResult& result, const nlohmann::json& config,
                                     const std::string& started_iso) {
  nlohmann::json j;
  j["meta"]["version"] = kReportSchemaVersion;
  j["meta"]["config"] = config;
  j["meta"]["started"] = started_iso;
  j["meta"]["elapsed_seconds"] = result.elapsed_seconds;
  j["results"] = nlohmann::json::array();
  for (const auto& r : result.reports) j["results"].push_back(result_to_json(r));
  j["summary"]["pass"] = result.passed;
  j["summary"]["fail"] = result.failed;
  j["summary"]["skipped"] = result.skipped;
  j["summary"]["rejected"] = result.rejected;
  return j;
}

inline nlohmann::json config_to_json(const SweepConfig& cfg) {
  nlohmann::json j;
  std::string fams;
  for (Family f : cfg.families) {
    if (!fams.empty()) fams += ",";
    fams += generators::family_name(f);
  }
  j["families"] = fams;
  j["q_even_max"] = cfg.q_even_max;
  j["q_odd_max"] = cfg.q_odd_max;
  j["a_policy"] = cfg.sample ? "sample" : "exhaustive";
  if (cfg.sample) {
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
  }
  j["checks"] = cfg.checks;
  j["symbolic"] = cfg.symbolic;
  return j;
}

inline std::string report_text_line(const CheckReport& r) {
  std::ostringstream os;
  os << status_name(r.status) << "  " << r.check_id << "  [" << r.params.str() << "]  "
     << r.evidence;
  return os.str();
}

}  // namespace verify
}  // namespace ortho8

#endif  // ORTHO8_REPORT_HPP_
