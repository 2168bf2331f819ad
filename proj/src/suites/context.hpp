#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parsum/instances.hpp"
#include "parsum/phi.hpp"
#include "parsum/random.hpp"
#include "parsum/report.hpp"
#include "parsum/sampling.hpp"
#include "parsum/suites.hpp"

namespace parsum::suites {

// Per-suite state: the configuration, a stream derived from (seed, id) and
// the properties collected so far.
class Context {
 public:
  Context(const SuiteConfig& config, std::string id, std::string title) : config_(config) {
    result_.id = std::move(id);
    result_.title = std::move(title);
    result_.seed = derive_seed(config.seed, result_.id);
    rng_.seed(result_.seed);
  }

  const SuiteConfig& config() const { return config_; }
  std::size_t cases() const { return config_.cases; }
  Rng& rng() { return rng_; }

  bool wants(std::string_view instance) const { return config_.instance == "all" || config_.instance == instance; }

  void add(const std::string& prefix, PropertyResult p) {
    if (!prefix.empty()) p.name = prefix + "/" + p.name;
    result_.properties.push_back(std::move(p));
  }
  void add(const std::string& prefix, std::vector<PropertyResult> ps) {
    for (auto& p : ps) add(prefix, std::move(p));
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  const SuiteConfig& config_;
  Rng rng_;
  SuiteResult result_;
};

// f(name, category, sampler) for each selected base instance.
template <class F>
void for_each_base(const Context& ctx, F&& f) {
  if (ctx.wants("symcat")) f(std::string("SymCat"), SymCat{}, Sampler<SymCat>{});
  if (ctx.wants("matcat")) f(std::string("MatCat"), MatCat<>{}, Sampler<MatCat<>>{});
  if (ctx.wants("freeperm")) f(std::string("FreePerm"), FreePerm{}, Sampler<FreePerm>{});
}

// f(name, Phi(base), sampler) for each selected base instance.
template <class F>
void for_each_phi(const Context& ctx, F&& f) {
  for_each_base(ctx, [&](const std::string& name, auto base, auto sampler) {
    using C = decltype(base);
    Phi<C> phi(base);
    Sampler<Phi<C>> s{phi, sampler};
    f("Phi(" + name + ")", phi, s);
  });
}

// Registration hooks, one per source file.
void add_combinatorics_suites(std::vector<SuiteInfo>& out);
void add_permcat_suites(std::vector<SuiteInfo>& out);
void add_parsum_suites(std::vector<SuiteInfo>& out);
void add_sigma_suites(std::vector<SuiteInfo>& out);
void add_cylinder_suites(std::vector<SuiteInfo>& out);
void add_fixed_suites(std::vector<SuiteInfo>& out);

}  // namespace parsum::suites
