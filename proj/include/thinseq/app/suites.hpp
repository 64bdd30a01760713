#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "thinseq/app/config.hpp"

namespace thinseq::app {

/// One computed quantity compared against its threshold.
struct Check {
  std::string subject;    // corpus entry or "-"
  std::string name;
  double value = 0.0;
  std::string relation;   // "<", "<=", ">", ">="
  double threshold = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  std::string error;  // exception text when the suite could not finish

  bool pass() const;
};

/// Known suite ids: T1..T9.
const std::vector<std::string>& suite_ids();

SuiteResult run_suite(const std::string& id, const RunConfig& cfg);

/// Runs cfg.verify.suites in order. Throws ConfigError "no suites selected" when
/// the suite list or the corpus is empty.
std::vector<SuiteResult> run_suites(const RunConfig& cfg);

std::string format_suites(const std::vector<SuiteResult>& results);
nlohmann::json suites_to_json(const std::vector<SuiteResult>& results);

}  // namespace thinseq::app
