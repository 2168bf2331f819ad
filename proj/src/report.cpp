#include "parsum/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace parsum {

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(properties.begin(), properties.end(), [](const PropertyResult& p) { return !p.passed; }));
}

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  std::size_t props = 0, failed = 0;
  for (const auto& suite : suites) {
    out << (suite.passed() ? "PASS " : "FAIL ") << suite.id << "  (" << suite.title << ")\n";
    for (const auto& p : suite.properties) {
      ++props;
      if (!p.passed) ++failed;
      out << "  " << (p.passed ? "ok   " : "FAIL ") << p.name << "  [" << p.cases << " cases]\n";
      if (p.counterexample) {
        const auto& c = *p.counterexample;
        out << "       law: " << p.law << "\n";
        out << "       case " << c.case_index << ": " << c.message << "\n";
        for (const auto& [name, term] : c.terms) out << "       " << name << " = " << term << "\n";
      }
    }
  }
  out << (failed == 0 ? "PASS" : "FAIL") << ": " << suites.size() << " suites, " << props << " properties, " << failed
      << " failed\n";
  return out.str();
}

std::string VerificationReport::json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["format"] = "parsum-verification-report";
  doc["version"] = 1;
  doc["config"] = {{"seed", config.seed}, {"cases", config.cases}, {"window", config.window},
                   {"instance", config.instance}};
  ordered_json suite_list = ordered_json::array();
  std::size_t props = 0, failed = 0;
  for (const auto& suite : suites) {
    ordered_json s;
    s["id"] = suite.id;
    s["title"] = suite.title;
    s["stream_seed"] = suite.seed;
    s["passed"] = suite.passed();
    ordered_json plist = ordered_json::array();
    for (const auto& p : suite.properties) {
      ++props;
      if (!p.passed) ++failed;
      ordered_json pj;
      pj["name"] = p.name;
      pj["law"] = p.law;
      pj["cases"] = p.cases;
      pj["passed"] = p.passed;
      if (p.counterexample) {
        ordered_json terms = ordered_json::array();
        for (const auto& [name, term] : p.counterexample->terms) terms.push_back({{"name", name}, {"term", term}});
        pj["counterexample"] = {{"case", p.counterexample->case_index},
                                {"message", p.counterexample->message},
                                {"terms", terms}};
      } else {
        pj["counterexample"] = nullptr;
      }
      plist.push_back(pj);
    }
    s["properties"] = plist;
    suite_list.push_back(s);
  }
  doc["suites"] = suite_list;
  doc["summary"] = {{"suites", suites.size()}, {"properties", props}, {"failed", failed}, {"passed", failed == 0}};
  return doc.dump(2) + "\n";
}

}  // namespace parsum
