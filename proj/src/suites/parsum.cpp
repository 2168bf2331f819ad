#include "context.hpp"
#include "parsum/laws.hpp"

namespace parsum::suites {

namespace {

// f(prefix, Phi(F), source, target, source sampler) for the extensions of the
// strict functors between the base instances, filtered by source instance.
template <class F>
void for_each_phi_functor(const Context& ctx, F&& f) {
  Phi<SymCat> sym;
  Phi<MatCat<>> mat;
  Phi<FreePerm> words;
  Sampler<Phi<SymCat>> sym_s{sym, {}};
  Sampler<Phi<FreePerm>> words_s{words, {}};
  if (ctx.wants("symcat")) {
    f(std::string("Phi(SymCat)"), phi_functor(mat, permutation_matrices()), sym, mat, sym_s);
    f(std::string("Phi(SymCat)"), phi_functor(words, single_letter()), sym, words, sym_s);
  }
  if (ctx.wants("freeperm")) {
    f(std::string("Phi(FreePerm)"), phi_functor(sym, forget_labels()), words, sym, words_s);
    f(std::string("Phi(FreePerm)"), phi_functor(words, delete_letter(1)), words, words, words_s);
  }
}

SuiteResult parsum_axioms(const SuiteConfig& config) {
  Context ctx(config, "parsum-axioms", "parsummable category axioms for the sequence construction");
  for_each_phi(ctx, [&](const std::string& name, const auto& phi, const auto& s) {
    ctx.add(name, check_parsummable(phi, s, ctx.rng(), ctx.cases(), ParsumCheckOptions{true}));
  });
  for_each_phi_functor(ctx, [&](const std::string& name, const auto& F, const auto& c, const auto& d, const auto& s) {
    ctx.add(name, check_parsum_morphism(F, c, d, s, ctx.rng(), ctx.cases()));
  });

  if (ctx.wants("freeperm")) {
    // Phi(G o F) = Phi(G) o Phi(F) on FreePerm -> SymCat -> MatCat
    Phi<FreePerm> words;
    Phi<SymCat> sym;
    Phi<MatCat<>> mat;
    Sampler<Phi<FreePerm>> s{words, {}};
    auto whole = phi_functor(mat, compose_functors(permutation_matrices(), forget_labels()));
    auto parts = compose_functors(phi_functor(mat, permutation_matrices()), phi_functor(sym, forget_labels()));
    ctx.add("Phi(FreePerm)",
            run_property("extension-functorial", "Phi(G o F) = Phi(G) o Phi(F)", ctx.cases(), ctx.rng(),
                         [&](Rng& r, Witness& w) {
                           auto f = s.morphism_from(s.object(r), r);
                           w.term("f", words.show(f));
                           return detail::same(w, mat, "Phi(GF) X", whole.obj(f.src), "Phi(G) Phi(F) X",
                                               parts.obj(f.src)) &&
                                  detail::same(w, mat, "Phi(GF) f", whole.mor(f), "Phi(G) Phi(F) f", parts.mor(f));
                         }));
  }

  if (ctx.wants("symcat")) {
    Phi<SymCat> phi;
    ctx.add("Phi(SymCat)",
            run_cases("structure-map-example",
                      "u swapping 1<->5, 2<->3 reverses {1:1, 2:1}; a monotone u gives the identity", 1,
                      [&](std::size_t, Witness& w) {
                        auto x = phi.make({{1, 1}, {2, 1}});
                        ApRow u = ApRow::finite_permutation({{1, 5}, {5, 1}, {2, 3}, {3, 2}});
                        auto swapped = phi.u_circ(u, x);
                        auto kept = phi.u_circ(ApRow::affine(2, 0), x);
                        return detail::same(w, phi, "u_circ", swapped, "reversal",
                                            phi.lift(x, phi.make({{5, 1}, {3, 1}}), SymCat::Morphism{Perm({2, 1})})) &&
                               detail::same(w, phi, "monotone u_circ", kept, "identity",
                                            phi.lift(x, phi.make({{2, 1}, {4, 1}}), SymCat::Morphism{Perm({1, 2})}));
                      }));
  }
  return ctx.finish();
}

SuiteResult generalized_action(const SuiteConfig& config, int law) {
  std::string id = "generalized-action-" + std::to_string(law);
  Context ctx(config, id, "action of families of injections on families of objects");
  for_each_phi(ctx, [&](const std::string& name, const auto& phi, const auto& s) {
    ctx.add(name, check_generalized_action(law, phi, s, ctx.rng(), ctx.cases()));
  });
  return ctx.finish();
}

SuiteResult structure_maps(const SuiteConfig& config, int law) {
  std::string id = "structure-maps-" + std::to_string(law);
  Context ctx(config, id, "structure isomorphisms between actions of families of injections");
  for_each_phi(ctx, [&](const std::string& name, const auto& phi, const auto& s) {
    ctx.add(name, check_structure_maps(law, phi, s, ctx.rng(), ctx.cases()));
  });
  return ctx.finish();
}

SuiteResult support_change(const SuiteConfig& config) {
  Context ctx(config, "support-change", "structure maps depend only on values on the support");
  for_each_phi(ctx, [&](const std::string& name, const auto& phi, const auto& s) {
    ctx.add(name, check_support_change(phi, s, ctx.rng(), ctx.cases()));
  });
  return ctx.finish();
}

SuiteResult universal_naturality(const SuiteConfig& config) {
  Context ctx(config, "universal-naturality", "parsummable morphisms commute with the structure maps");
  for_each_phi_functor(ctx, [&](const std::string& name, const auto& F, const auto& c, const auto& d, const auto& s) {
    ctx.add(name, check_universal_naturality(F, c, d, s, ctx.rng(), ctx.cases()));
  });
  return ctx.finish();
}

}  // namespace

void add_parsum_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"parsum-axioms", "parsummable category axioms for the sequence construction", parsum_axioms});
  for (int law = 1; law <= 4; ++law)
    out.push_back({"generalized-action-" + std::to_string(law), "action of families of injections on families of objects",
                   [law](const SuiteConfig& c) { return generalized_action(c, law); }});
  for (int law = 1; law <= 6; ++law)
    out.push_back({"structure-maps-" + std::to_string(law),
                   "structure isomorphisms between actions of families of injections",
                   [law](const SuiteConfig& c) { return structure_maps(c, law); }});
  out.push_back({"support-change", "structure maps depend only on values on the support", support_change});
  out.push_back({"universal-naturality", "parsummable morphisms commute with the structure maps",
                 universal_naturality});
}

}  // namespace parsum::suites
