#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parsum/report.hpp"

namespace parsum {

struct SuiteInfo {
  std::string id;
  std::string title;
  std::function<SuiteResult(const SuiteConfig&)> run;
};

// All verification suites in their canonical order.
const std::vector<SuiteInfo>& suite_registry();
std::vector<std::string> suite_ids();

// Runs the named suites ("all" expands to every suite). Each suite samples
// from its own stream seeded by (config.seed, suite id), so the result of a
// suite does not depend on which others run. Unknown ids throw Error.
VerificationReport run_suites(const std::vector<std::string>& ids, const SuiteConfig& config);

// Worked examples printed by the command-line tool.
std::vector<std::string> demo_names();
std::string run_demo(const std::string& name);

}  // namespace parsum
