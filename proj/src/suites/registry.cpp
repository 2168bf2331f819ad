#include <algorithm>

#include "context.hpp"

namespace parsum {

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = [] {
    std::vector<SuiteInfo> out;
    suites::add_combinatorics_suites(out);
    suites::add_permcat_suites(out);
    suites::add_parsum_suites(out);
    suites::add_sigma_suites(out);
    suites::add_cylinder_suites(out);
    suites::add_fixed_suites(out);
    return out;
  }();
  return registry;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suite_registry()) ids.push_back(s.id);
  return ids;
}

VerificationReport run_suites(const std::vector<std::string>& ids, const SuiteConfig& config) {
  const auto& registry = suite_registry();
  std::vector<const SuiteInfo*> selected;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& s : registry) selected.push_back(&s);
      continue;
    }
    auto it = std::find_if(registry.begin(), registry.end(), [&](const SuiteInfo& s) { return s.id == id; });
    if (it == registry.end()) throw Error("unknown suite '" + id + "'");
    selected.push_back(&*it);
  }
  static const std::vector<std::string> instances = {"all", "symcat", "matcat", "freeperm"};
  if (std::find(instances.begin(), instances.end(), config.instance) == instances.end())
    throw Error("unknown instance '" + config.instance + "'");
  if (config.cases == 0) throw Error("cases must be positive");

  VerificationReport report;
  report.config = config;
  for (const SuiteInfo* s : selected) {
    // a suite listed twice runs once
    bool seen = std::any_of(report.suites.begin(), report.suites.end(),
                            [&](const SuiteResult& r) { return r.id == s->id; });
    if (!seen) report.suites.push_back(s->run(config));
  }
  return report;
}

}  // namespace parsum
