// Runs the acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "parsum/fault.hpp"
#include "parsum/suites.hpp"

using namespace parsum;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

const PropertyResult* find_property(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.suites)
    for (const auto& p : s.properties)
      if (p.name == name) return &p;
  return nullptr;
}

// Every suite passed, and each listed property exists with the expected case count (0 = any).
Outcome expect_report(const VerificationReport& r, const std::vector<std::pair<std::string, std::size_t>>& required) {
  Outcome o;
  for (const auto& s : r.suites)
    for (const auto& p : s.properties)
      if (!p.passed) {
        o.passed = false;
        o.detail = s.id + "/" + p.name + ": " + p.counterexample->message;
        return o;
      }
  for (const auto& [name, cases] : required) {
    const PropertyResult* p = find_property(r, name);
    if (p == nullptr) return {false, "missing property " + name};
    if (cases != 0 && p->cases != cases)
      return {false, name + " ran " + std::to_string(p->cases) + " cases, expected " + std::to_string(cases)};
  }
  std::size_t n = 0;
  for (const auto& s : r.suites) n += s.properties.size();
  o.detail = std::to_string(r.suites.size()) + " suites, " + std::to_string(n) + " properties";
  return o;
}

SuiteConfig with_cases(std::size_t cases, std::size_t window = 200) {
  SuiteConfig c;
  c.cases = cases;
  c.window = window;
  return c;
}

std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Outcome criterion_1() {
  auto r = run_suites({"inj-soundness"}, with_cases(500, 500));
  return expect_report(r, {{"injective-on-window", 500},
                           {"preimage-inverts-apply", 500},
                           {"equality-decision", 500},
                           {"disjointness-decision", 500}});
}

Outcome criterion_2() {
  // sum over k <= 4 of k! * 10^k block-permutation choices (10 permutations of size <= 3)
  std::size_t pairs = 0, subsets = 0, sizes = 0;
  std::size_t fact = 1, pow10 = 1, pow2 = 1, pow4 = 1;
  for (std::size_t k = 0; k <= 4; ++k) {
    if (k > 0) {
      fact *= k;
      pow10 *= 10;
      pow2 *= 2;
      pow4 *= 4;
    }
    pairs += fact * pow10;
    subsets += fact * pow2;
    sizes += fact * pow4;
  }
  auto r = run_suites({"barratt-eccles"}, SuiteConfig{});
  return expect_report(r, {{"block-shuffle-formula", sizes},
                           {"structure-map-two-expressions", pairs},
                           {"sorting-permutation-block-form", subsets}});
}

Outcome criterion_3() {
  auto r = run_suites({"coherence-well-defined"}, SuiteConfig{});
  // 24 permutations times 81 count families, or 7^4 word families
  return expect_report(r, {{"SymCat/factorization-independent", 24 * 81},
                           {"MatCat/factorization-independent", 24 * 81},
                           {"FreePerm/factorization-independent", 24 * 2401}});
}

Outcome criterion_4() {
  auto ids = numbered("generalized-action-", 4);
  for (auto& s : numbered("structure-maps-", 6)) ids.push_back(s);
  auto r = run_suites(ids, with_cases(200));
  std::vector<std::pair<std::string, std::size_t>> req;
  for (const char* inst : {"Phi(SymCat)/", "Phi(FreePerm)/"}) {
    for (auto& s : numbered("generalized-action-", 4)) req.emplace_back(inst + s, 200);
    for (auto& s : numbered("structure-maps-", 6)) req.emplace_back(inst + s, 200);
  }
  return expect_report(r, req);
}

Outcome criterion_5() {
  auto r = run_suites({"sigma-perm-axioms", "sigma-coherence"}, with_cases(200));
  std::vector<std::pair<std::string, std::size_t>> req;
  for (const char* inst : {"SymCat", "MatCat", "FreePerm"}) {
    std::string p = std::string("Sigma(Phi(") + inst + "))/";
    for (const char* law : {"composition-unital", "composition-associative", "tensor-strict-on-objects",
                            "tensor-strict-on-morphisms", "tensor-functorial", "braiding-natural", "braiding-unital",
                            "braiding-self-inverse", "braiding-associative"})
      req.emplace_back(p + law, 200);
    for (int m = 0; m <= 5; ++m) req.emplace_back(p + "coherence-" + std::to_string(m), 0);
  }
  return expect_report(r, req);
}

Outcome criterion_6() {
  auto r = run_suites({"mu-nu-comparison"}, with_cases(200));
  std::vector<std::pair<std::string, std::size_t>> req;
  for (const char* law : {"mu-pentagon", "mu-hexagon", "mu-triangle", "nu-nabla-natural", "nu-associativity", "nu-unit",
                          "nu-symmetry", "nu-fully-faithful"})
    req.emplace_back(std::string("Phi(SymCat)/") + law, 200);
  return expect_report(r, req);
}

Outcome criterion_7() {
  auto r = run_suites({"t-equivalence"}, with_cases(200));
  return expect_report(r, {{"Sigma(Phi(SymCat))/T:tensor", 200},
                           {"Sigma(Phi(SymCat))/T:braiding", 200},
                           {"Sigma(Phi(SymCat))/T:faithful", 200},
                           {"Sigma(Phi(SymCat))/T:full", 200},
                           {"Sigma(Phi(SymCat))/T:essentially-surjective", 200},
                           {"Sigma(Phi(SymCat))/T-natural", 200}});
}

Outcome criterion_8() {
  auto r = run_suites({"cylinder"}, with_cases(200));
  return expect_report(r, {{"Cyl/I1:equivariant", 200},
                           {"Cyl/I1:sums", 200},
                           {"Cyl/I2:equivariant", 200},
                           {"Cyl/I2:sums", 200},
                           {"Cyl/triangle-first", 200},
                           {"Cyl/triangle-second", 200},
                           {"Cyl/I1:full", 200},
                           {"Cyl/I2:essentially-surjective", 200},
                           {"Cyl/S_mu^:essentially-surjective", 200}});
}

Outcome criterion_9() {
  auto r = run_suites({"zigzag"}, with_cases(200));
  return expect_report(r, {{"Phi(SymCat)/incl:equivariant", 200},
                           {"Phi(SymCat)/incl:full", 200},
                           {"Phi(SymCat)/I1:sums", 200},
                           {"Phi(SymCat)/I1:essentially-surjective", 200},
                           {"Phi(SymCat)/I2:faithful", 200},
                           {"H=Phi(permutation-matrices)/S-natural", 200},
                           {"H=Phi(permutation-matrices)/inclusion-natural", 200},
                           {"H=Phi(permutation-matrices)/cylinder-first-leg-natural", 200},
                           {"H=Phi(permutation-matrices)/cylinder-second-leg-natural", 200}});
}

Outcome criterion_10() {
  auto r = run_suites({"fixed-points"}, SuiteConfig{});
  std::size_t all = 1;
  for (int i = 0; i < 9; ++i) all *= 3;
  return expect_report(r, {{"decomposition-exhaustive", all},
                           {"decomposition-exhaustive-count", 1},
                           {"homomorphism-iso-fixed", 0},
                           {"components-by-total", 1}});
}

Outcome criterion_11() {
  SuiteConfig config = with_cases(30);
  for (Fault f : all_faults()) {
    ScopedFault scoped(f);
    auto r = run_suites({"all"}, config);
    bool caught = false;
    for (const auto& s : r.suites)
      for (const auto& p : s.properties)
        if (!p.passed && p.counterexample && !p.counterexample->terms.empty()) caught = true;
    if (!caught) return {false, "fault " + fault_name(f) + " went unnoticed"};
  }
  return {true, std::to_string(all_faults().size()) + " faults each caught with a counterexample"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "injection algebra soundness", 10, criterion_1},
      {2, "block shuffle and structure map consistency", 30, criterion_2},
      {3, "coherence isomorphisms independent of factorization", 0, criterion_3},
      {4, "bracket calculus identities", 0, criterion_4},
      {5, "tuples form a permutative category", 0, criterion_5},
      {6, "induced structure and comparison functor", 0, criterion_6},
      {7, "total tensor functor is an equivalence", 0, criterion_7},
      {8, "cylinder maps and triangles", 0, criterion_8},
      {9, "zig-zag legs and naturality", 0, criterion_9},
      {10, "fixed objects and path components", 60, criterion_10},
      {11, "fault detection", 0, criterion_11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.passed = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    std::printf("criterion %2d %s  %s (%.2f s): %s\n", c.id, o.passed ? "PASS" : "FAIL", c.what, secs,
                o.detail.c_str());
    if (!o.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
