#include "context.hpp"
#include "parsum/laws.hpp"

namespace parsum::suites {

namespace {

SuiteResult permcat_axioms(const SuiteConfig& config) {
  Context ctx(config, "permcat-axioms", "permutative category axioms and strict functors between the instances");
  for_each_base(ctx, [&](const std::string& name, const auto& c, const auto& s) {
    ctx.add(name, check_permutative(c, s, ctx.rng(), ctx.cases()));
  });
  SymCat sym;
  MatCat<> mat;
  FreePerm words;
  Sampler<SymCat> sym_s;
  Sampler<FreePerm> words_s;
  if (ctx.wants("symcat")) {
    ctx.add("SymCat", check_strict_functor(permutation_matrices(), sym, mat, sym_s, ctx.rng(), ctx.cases()));
    ctx.add("SymCat", check_strict_functor(single_letter(), sym, words, sym_s, ctx.rng(), ctx.cases()));
  }
  if (ctx.wants("freeperm")) {
    ctx.add("FreePerm", check_strict_functor(forget_labels(), words, sym, words_s, ctx.rng(), ctx.cases()));
    ctx.add("FreePerm", check_strict_functor(delete_letter(1), words, words, words_s, ctx.rng(), ctx.cases()));
  }
  return ctx.finish();
}

}  // namespace

void add_permcat_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"permcat-axioms", "permutative category axioms and strict functors between the instances",
                 permcat_axioms});
}

}  // namespace parsum::suites
