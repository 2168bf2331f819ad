#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parsum/random.hpp"

namespace parsum {

struct Counterexample {
  std::size_t case_index = 0;
  std::string message;
  std::vector<std::pair<std::string, std::string>> terms;  // name, rendered term
};

struct PropertyResult {
  std::string name;
  std::string law;  // the statement being checked
  std::size_t cases = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::size_t window = 200;
  std::string instance = "all";  // symcat, matcat, freeperm or all
};

struct SuiteResult {
  std::string id;
  std::string title;
  std::uint64_t seed = 0;  // derived stream seed
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::size_t failures() const;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  // Human-readable summary, one line per property plus counterexamples.
  std::string text() const;
  // Structured document with a fixed key order; identical configs give identical output.
  std::string json() const;
};

// Collects the rendered terms of one test case and the reason it failed.
class Witness {
 public:
  void term(std::string name, std::string rendered) { terms_.emplace_back(std::move(name), std::move(rendered)); }
  // Records the first failed expectation; returns ok.
  bool expect(bool ok, const std::string& message) {
    if (!ok && message_.empty()) message_ = message;
    return ok;
  }
  void fail(const std::string& message) {
    if (message_.empty()) message_ = message;
  }
  const std::string& message() const { return message_; }
  std::vector<std::pair<std::string, std::string>> take_terms() { return std::move(terms_); }

 private:
  std::vector<std::pair<std::string, std::string>> terms_;
  std::string message_;
};

// Runs body(index, witness) for index = 0..count-1 and stops at the first
// failure. Exceptions count as failures and are reported with their message.
template <class Body>
PropertyResult run_cases(std::string name, std::string law, std::size_t count, Body&& body) {
  PropertyResult result{std::move(name), std::move(law)};
  for (std::size_t k = 0; k < count; ++k) {
    Witness w;
    bool ok = false;
    try {
      ok = body(k, w);
    } catch (const std::exception& e) {
      w.fail(std::string("exception: ") + e.what());
    }
    ++result.cases;
    if (!ok) {
      if (w.message().empty()) w.fail("property does not hold");
      result.passed = false;
      result.counterexample = Counterexample{k, w.message(), w.take_terms()};
      break;
    }
  }
  return result;
}

// Random variant: body(rng, witness).
template <class Body>
PropertyResult run_property(std::string name, std::string law, std::size_t count, Rng& rng, Body&& body) {
  return run_cases(std::move(name), std::move(law), count, [&](std::size_t, Witness& w) { return body(rng, w); });
}

}  // namespace parsum
