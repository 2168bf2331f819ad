#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parsum/fault.hpp"
#include "parsum/suites.hpp"

namespace {

// PARSUM_SEED supplies the default seed; an explicit --seed wins.
std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("PARSUM_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw parsum::Error(std::string("PARSUM_SEED is not a number: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites and worked examples for parsummable categories"};
  app.require_subcommand(1);

  parsum::SuiteConfig config;
  std::vector<std::string> suites{"all"};
  std::string report_path, fault_name;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run verification suites; exit status 0 iff every property holds");
  verify->add_option("--suite", suites, "suite id, repeatable (default: all)");
  auto* seed_opt = verify->add_option("--seed", config.seed, "base seed (default: PARSUM_SEED or 1)");
  verify->add_option("--cases", config.cases, "random cases per property")->check(CLI::PositiveNumber);
  verify->add_option("--window", config.window, "pointwise window for injection checks")->check(CLI::PositiveNumber);
  verify->add_option("--instance", config.instance, "base instance")
      ->check(CLI::IsMember({"all", "symcat", "matcat", "freeperm"}));
  verify->add_option("--report", report_path, "write the JSON report to this path");
  verify->add_flag("--list", list, "list suite ids and exit");
  verify->add_option("--inject-fault", fault_name, "switch on a deliberate defect");

  std::string demo;
  auto* demo_cmd = app.add_subcommand("demo", "print a worked example");
  demo_cmd->add_option("name", demo, "example name")->required()->check(CLI::IsMember(parsum::demo_names()));

  CLI11_PARSE(app, argc, argv);

  try {
    if (demo_cmd->parsed()) {
      std::cout << parsum::run_demo(demo);
      return 0;
    }
    if (list) {
      for (const auto& info : parsum::suite_registry()) std::cout << info.id << "  " << info.title << "\n";
      return 0;
    }
    if (seed_opt->count() == 0) config.seed = seed_from_env(config.seed);
    std::optional<parsum::ScopedFault> fault;
    if (!fault_name.empty()) {
      auto f = parsum::parse_fault(fault_name);
      if (!f) {
        std::cerr << "unknown fault: " << fault_name << "\n";
        return 2;
      }
      fault.emplace(*f);
    }
    auto report = parsum::run_suites(suites, config);
    std::cout << report.text();
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "cannot write " << report_path << "\n";
        return 2;
      }
      out << report.json();
    }
    return report.passed() ? 0 : 1;
  } catch (const parsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
