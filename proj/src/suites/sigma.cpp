#include "context.hpp"
#include "parsum/laws.hpp"
#include "parsum/sigma.hpp"

namespace parsum::suites {

namespace {

using detail::same;

// f("Sigma(Phi(name))", Sigma(Phi(base)), sampler) per selected instance.
template <class F>
void for_each_sigma(const Context& ctx, F&& f) {
  for_each_phi(ctx, [&](const std::string& name, const auto& phi, const auto& ps) {
    using P = std::decay_t<decltype(phi)>;
    Sigma<P> sigma(phi);
    Sampler<Sigma<P>> s{sigma, ps};
    f("Sigma(" + name + ")", sigma, s);
  });
}

// The class of the identity of phi_* X along phi and a reindexing of phi.
// Entry p of src sits at position target[p] of dst.
template <class P>
typename Sigma<P>::Morphism identity_class(const Sigma<P>& sigma, const typename Sigma<P>::Object& src,
                                           const std::vector<std::size_t>& target) {
  ApInjection phi = canonical_interleave(src.size());
  std::vector<ApRow> rows(src.size());
  typename Sigma<P>::Object dst(src.size());
  for (std::size_t p = 0; p < src.size(); ++p) {
    rows[target[p] - 1] = phi.rows()[p];
    dst[target[p] - 1] = src[p];
  }
  std::vector<Nat> labels;
  for (std::size_t i = 1; i <= src.size(); ++i) labels.push_back(static_cast<Nat>(i));
  ApInjection psi(labels, rows);
  return sigma.make_morphism(psi, sigma.base().identity(sigma.realize(src)), phi, src, dst);
}

SuiteResult sigma_perm_axioms(const SuiteConfig& config) {
  Context ctx(config, "sigma-perm-axioms", "tuples of objects form a permutative category");
  for_each_sigma(ctx, [&](const std::string& name, const auto& sigma, const auto& s) {
    const auto& p = sigma.base();
    ctx.add(name, check_permutative(sigma, s, ctx.rng(), ctx.cases()));
    ctx.add(name, run_property("representative-independent",
                               "a morphism given along any pair of injections has one canonical class",
                               ctx.cases(), ctx.rng(), [&](Rng& r, Witness& w) {
                                 auto a = s.morphism_from(s.object(r), r);
                                 ApInjection phi = random_injection(r, a.src.size());
                                 ApInjection psi = random_injection(r, a.dst.size());
                                 ApInjection cm = canonical_interleave(a.src.size());
                                 ApInjection cn = canonical_interleave(a.dst.size());
                                 w.term("a", sigma.show(a));
                                 w.term("phi", phi.str());
                                 w.term("psi", psi.str());
                                 auto rep = p.compose(bracket_gen(p, psi, cn, a.dst),
                                                      p.compose(a.f, bracket_gen(p, cm, phi, a.src)));
                                 return same(w, sigma, "class of the moved representative",
                                             sigma.make_morphism(psi, rep, phi, a.src, a.dst), "a", a);
                               }));
    ctx.add(name, run_property("arity-checked", "representatives with the wrong arity are rejected", ctx.cases(),
                               ctx.rng(), [&](Rng& r, Witness& w) {
                                 auto x = s.nonunit_object(r);
                                 ApInjection short_phi = canonical_interleave(x.size() - 1);
                                 auto realized = sigma.realize(x);
                                 w.term("X", sigma.show(x));
                                 try {
                                   (void)sigma.make_morphism(short_phi, p.identity(realized), short_phi, x, x);
                                 } catch (const Error&) {
                                   return true;
                                 }
                                 w.fail("make_morphism accepted an injection of the wrong arity");
                                 return false;
                               }));
  });

  if (ctx.wants("symcat")) {
    Phi<SymCat> sym;
    Phi<MatCat<>> mat;
    Sigma<Phi<SymCat>> ssym(sym);
    Sigma<Phi<MatCat<>>> smat(mat);
    Sampler<Sigma<Phi<SymCat>>> s{ssym, {sym, {}}};
    auto F = sigma_functor(phi_functor(mat, permutation_matrices()));
    ctx.add("Sigma(Phi(SymCat))", check_strict_functor(F, ssym, smat, s, ctx.rng(), ctx.cases()));
  }
  return ctx.finish();
}

SuiteResult sigma_coherence(const SuiteConfig& config) {
  Context ctx(config, "sigma-coherence",
              "coherence isomorphisms of tuples are the classes of identities along block reindexings");
  for_each_sigma(ctx, [&](const std::string& name, const auto& sigma, const auto& s) {
    for (std::size_t m = 0; m <= 5; ++m) {
      auto perms = all_perms(m);
      std::size_t rounds = std::max<std::size_t>(1, ctx.cases() / 40);
      ctx.add(name, run_cases("coherence-" + std::to_string(m),
                              "coh(sigma, (X_1, ..., X_" + std::to_string(m) +
                                  ")) = class of id along the block-shuffled interleave",
                              perms.size() * rounds, [&](std::size_t i, Witness& w) {
                                const Perm& p = perms[i % perms.size()];
                                Rng& r = ctx.rng();
                                std::vector<typename std::decay_t<decltype(sigma)>::Object> xs;
                                std::vector<std::size_t> sizes;
                                for (std::size_t k = 0; k < m; ++k) {
                                  xs.push_back(s.object(r));
                                  if (xs.back().size() > 2) xs.back().resize(2);
                                  sizes.push_back(xs.back().size());
                                }
                                w.term("sigma", p.str());
                                typename std::decay_t<decltype(sigma)>::Object flat;
                                for (const auto& x : xs) flat = sigma.tensor_obj(flat, x);
                                w.term("X", sigma.show(flat));
                                Perm blocks = block_shuffle(p, sizes);
                                return same(w, sigma, "coh", coherence_iso(sigma, p, xs), "identity class",
                                            identity_class(sigma, flat, blocks.one_line()));
                              }));
    }
  });
  return ctx.finish();
}

SuiteResult mu_nu_comparison(const SuiteConfig& config) {
  Context ctx(config, "mu-nu-comparison",
              "the structure induced by a pair of injections and its comparison with tuples");
  std::size_t n = ctx.cases();
  for_each_phi(ctx, [&](const std::string& name, const auto& p, const auto& s) {
    using P = std::decay_t<decltype(p)>;
    using Obj = typename P::Object;
    Sigma<P> sigma(p);
    auto random_mu = [&](Rng& r, Witness& w) {
      MuStar<P> m{p, random_injection(r, 2)};
      w.term("mu", m.mu.str());
      return m;
    };
    auto objects = [&](Rng& r, Witness& w, std::size_t k) {
      std::vector<Obj> xs;
      for (std::size_t i = 0; i < k; ++i) {
        xs.push_back(s.object(r));
        w.term("X" + std::to_string(i + 1), p.show(xs.back()));
      }
      return xs;
    };
    auto mu_prop = [&](std::string prop, std::string law, auto body) {
      ctx.add(name, run_property(std::move(prop), std::move(law), n, ctx.rng(), body));
    };

    mu_prop("mu-pentagon", "a_{X,Y,ZW} a_{XY,Z,W} = (1 a_{Y,Z,W}) a_{X,YZ,W} (a_{X,Y,Z} 1)", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto x = objects(r, w, 4);
      auto id = [&](const Obj& o) { return p.identity(o); };
      auto lhs = p.compose(m.associator(x[0], x[1], m.tensor(x[2], x[3])),
                           m.associator(m.tensor(x[0], x[1]), x[2], x[3]));
      auto rhs = p.compose(m.tensor_mor(id(x[0]), m.associator(x[1], x[2], x[3])),
                           p.compose(m.associator(x[0], m.tensor(x[1], x[2]), x[3]),
                                     m.tensor_mor(m.associator(x[0], x[1], x[2]), id(x[3]))));
      return same(w, p, "two-step", lhs, "three-step", rhs);
    });
    mu_prop("mu-hexagon", "a_{Y,Z,X} s_{X,YZ} a_{X,Y,Z} = (1 s_{X,Z}) a_{Y,X,Z} (s_{X,Y} 1)", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto x = objects(r, w, 3);
      auto lhs = p.compose(m.associator(x[1], x[2], x[0]),
                           p.compose(m.symmetry(x[0], m.tensor(x[1], x[2])), m.associator(x[0], x[1], x[2])));
      auto rhs = p.compose(m.tensor_mor(p.identity(x[1]), m.symmetry(x[0], x[2])),
                           p.compose(m.associator(x[1], x[0], x[2]), m.tensor_mor(m.symmetry(x[0], x[1]), p.identity(x[2]))));
      return same(w, p, "lhs", lhs, "rhs", rhs);
    });
    mu_prop("mu-triangle", "(1 l_Y) a_{X,0,Y} = r_X 1", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto x = objects(r, w, 2);
      auto lhs = p.compose(m.tensor_mor(p.identity(x[0]), m.left_unitor(x[1])), m.associator(x[0], p.zero(), x[1]));
      auto rhs = m.tensor_mor(m.right_unitor(x[0]), p.identity(x[1]));
      return same(w, p, "(1 l) a", lhs, "r 1", rhs);
    });
    mu_prop("mu-symmetry-natural", "s_{X',Y'} (f g) = (g f) s_{X,Y}", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto f = s.morphism_from(s.object(r), r), g = s.morphism_from(s.object(r), r);
      w.term("f", p.show(f));
      w.term("g", p.show(g));
      return same(w, p, "s (f g)", p.compose(m.symmetry(p.cod(f), p.cod(g)), m.tensor_mor(f, g)), "(g f) s",
                  p.compose(m.tensor_mor(g, f), m.symmetry(p.dom(f), p.dom(g))));
    });
    mu_prop("mu-symmetry-involutive", "s_{Y,X} s_{X,Y} = id", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto x = objects(r, w, 2);
      return same(w, p, "s s", p.compose(m.symmetry(x[1], x[0]), m.symmetry(x[0], x[1])), "id",
                  p.identity(m.tensor(x[0], x[1])));
    });
    mu_prop("mu-tensor-functorial", "(g' g) (f' f) = (g' f')(g f), id id = id", [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      auto f = s.morphism_from(s.object(r), r), g = s.morphism_from(s.object(r), r);
      auto f2 = s.morphism_from(p.cod(f), r), g2 = s.morphism_from(p.cod(g), r);
      w.term("f", p.show(f));
      w.term("g", p.show(g));
      return same(w, p, "composite tensor", m.tensor_mor(p.compose(f2, f), p.compose(g2, g)), "tensor composite",
                  p.compose(m.tensor_mor(f2, g2), m.tensor_mor(f, g))) &&
             same(w, p, "id id", m.tensor_mor(p.identity(p.dom(f)), p.identity(p.dom(g))), "id",
                  p.identity(m.tensor(p.dom(f), p.dom(g))));
    });

    auto nu_of = [&](Rng& r, Witness& w) {
      auto m = random_mu(r, w);
      return std::pair{m, NuTilde<P>{sigma, m.mu}};
    };
    mu_prop("nu-nabla-natural", "nabla_{X',Y'} (nu f, nu g) = nu(f g) nabla_{X,Y}", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto f = s.morphism_from(s.object(r), r), g = s.morphism_from(s.object(r), r);
      w.term("f", p.show(f));
      w.term("g", p.show(g));
      return same(w, sigma, "nabla (f, g)",
                  sigma.compose(nu.nabla(p.cod(f), p.cod(g)), sigma.tensor_mor(nu.mor(f), nu.mor(g))), "nu(fg) nabla",
                  sigma.compose(nu.mor(m.tensor_mor(f, g)), nu.nabla(p.dom(f), p.dom(g))));
    });
    mu_prop("nu-associativity", "nu(a) nabla_{XY,Z} (nabla_{X,Y}, 1) = nabla_{X,YZ} (1, nabla_{Y,Z})",
            [&](Rng& r, Witness& w) {
              auto [m, nu] = nu_of(r, w);
              auto x = objects(r, w, 3);
              auto one_z = sigma.identity(nu.obj(x[2])), one_x = sigma.identity(nu.obj(x[0]));
              auto lhs = sigma.compose(nu.mor(m.associator(x[0], x[1], x[2])),
                                       sigma.compose(nu.nabla(m.tensor(x[0], x[1]), x[2]),
                                                     sigma.tensor_mor(nu.nabla(x[0], x[1]), one_z)));
              auto rhs = sigma.compose(nu.nabla(x[0], m.tensor(x[1], x[2])),
                                       sigma.tensor_mor(one_x, nu.nabla(x[1], x[2])));
              return same(w, sigma, "left nested", lhs, "right nested", rhs);
            });
    mu_prop("nu-unit", "nu(l_X) nabla_{0,X} (e, 1) = id = nu(r_X) nabla_{X,0} (1, e)", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto x = objects(r, w, 1)[0];
      auto one = sigma.identity(nu.obj(x));
      auto left = sigma.compose(nu.mor(m.left_unitor(x)),
                                sigma.compose(nu.nabla(p.zero(), x), sigma.tensor_mor(nu.unit_iso(), one)));
      auto right = sigma.compose(nu.mor(m.right_unitor(x)),
                                 sigma.compose(nu.nabla(x, p.zero()), sigma.tensor_mor(one, nu.unit_iso())));
      return same(w, sigma, "left unit square", left, "id", one) &&
             same(w, sigma, "right unit square", right, "id", one);
    });
    mu_prop("nu-symmetry", "nu(s_{X,Y}) nabla_{X,Y} = nabla_{Y,X} tau", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto x = objects(r, w, 2);
      return same(w, sigma, "nu(s) nabla", sigma.compose(nu.mor(m.symmetry(x[0], x[1])), nu.nabla(x[0], x[1])),
                  "nabla tau", sigma.compose(nu.nabla(x[1], x[0]), sigma.braiding(nu.obj(x[0]), nu.obj(x[1]))));
    });
    mu_prop("nu-fully-faithful", "nu^-1(nu f) = f, nu(nu^-1 h) = h", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto f = s.morphism_from(s.object(r), r);
      w.term("f", p.show(f));
      auto h = sigma.compose(nu.mor(f), sigma.lift(nu.obj(p.dom(f)), nu.obj(p.dom(f)),
                                                     s.automorphism(p.dom(f), r)));
      w.term("h", sigma.show(h));
      return same(w, p, "nu^-1 nu f", nu.hom_inverse(nu.mor(f)), "f", f) &&
             same(w, sigma, "nu nu^-1 h", nu.mor(nu.hom_inverse(h)), "h", h);
    });
    mu_prop("nu-functor", "nu(id) = id, nu(g f) = nu(g) nu(f)", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto f = s.morphism_from(s.object(r), r);
      auto g = s.morphism_from(p.cod(f), r);
      return same(w, sigma, "nu(id)", nu.mor(p.identity(p.dom(f))), "id", sigma.identity(nu.obj(p.dom(f)))) &&
             same(w, sigma, "nu(g f)", nu.mor(p.compose(g, f)), "nu g nu f", sigma.compose(nu.mor(g), nu.mor(f)));
    });
    Sampler<Sigma<P>> tuples{sigma, s};
    mu_prop("nu-collapse", "every tuple is isomorphic to the 1-tuple of its realization", [&](Rng& r, Witness& w) {
      auto [m, nu] = nu_of(r, w);
      auto xs = tuples.object(r);
      w.term("X", sigma.show(xs));
      auto there = nu.collapse(xs), back = nu.collapse_inverse(xs);
      return same(w, sigma, "back o there", sigma.compose(back, there), "id", sigma.identity(xs)) &&
             same(w, sigma, "there o back", sigma.compose(there, back), "id", sigma.identity(sigma.cod(there)));
    });
  });
  return ctx.finish();
}

SuiteResult t_equivalence(const SuiteConfig& config) {
  Context ctx(config, "t-equivalence", "total tensor product from tuples of sequences back to the base");
  for_each_base(ctx, [&](const std::string& name, const auto& c, const auto& bs) {
    using C = std::decay_t<decltype(c)>;
    Phi<C> phi(c);
    Sigma<Phi<C>> sigma(phi);
    Sampler<Sigma<Phi<C>>> s{sigma, {phi, bs}};
    TFunctor<C> t{sigma};
    auto T = t.as_functor();
    std::string prefix = "Sigma(Phi(" + name + "))";
    ctx.add(prefix, check_strict_functor(T, sigma, c, s, ctx.rng(), ctx.cases()));
    EquivalenceWitness<Sigma<Phi<C>>, C> wit{
        [t](const auto& x, const auto& y, const typename C::Morphism& f) { return t.hom_inverse(x, y, f); },
        [t](const typename C::Object& y) { return t.object_preimage(y); },
        [c](const typename C::Object& y) { return c.identity(y); },
        [c](const typename C::Object& y) { return c.identity(y); }};
    ctx.add(prefix, check_equivalence(T, wit, sigma, c, s, bs, ctx.rng(), ctx.cases()));
  });

  if (ctx.wants("symcat")) {
    Phi<SymCat> sym;
    Phi<MatCat<>> mat;
    Sigma<Phi<SymCat>> ssym(sym);
    Sigma<Phi<MatCat<>>> smat(mat);
    Sampler<Sigma<Phi<SymCat>>> s{ssym, {sym, {}}};
    TFunctor<SymCat> t_sym{ssym};
    TFunctor<MatCat<>> t_mat{smat};
    auto H = permutation_matrices();
    auto lifted = sigma_functor(phi_functor(mat, H));
    MatCat<> m;
    ctx.add("Sigma(Phi(SymCat))",
            run_property("T-natural", "T(Sigma Phi(F) a) = F(T a) for F = permutation matrices", ctx.cases(),
                         ctx.rng(), [&](Rng& r, Witness& w) {
                           auto a = s.morphism_from(s.object(r), r);
                           w.term("a", ssym.show(a));
                           return same(w, m, "T Sigma Phi(F) X", t_mat.obj(lifted.obj(a.src)), "F T X",
                                       H.obj(t_sym.obj(a.src))) &&
                                  same(w, m, "T Sigma Phi(F) a", t_mat.mor(lifted.mor(a)), "F T a",
                                       H.mor(t_sym.mor(a)));
                         }));
  }
  return ctx.finish();
}

}  // namespace

void add_sigma_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"sigma-perm-axioms", "tuples of objects form a permutative category", sigma_perm_axioms});
  out.push_back({"sigma-coherence", "coherence isomorphisms of tuples are the classes of identities along block reindexings",
                 sigma_coherence});
  out.push_back({"mu-nu-comparison", "the structure induced by a pair of injections and its comparison with tuples",
                 mu_nu_comparison});
  out.push_back({"t-equivalence", "total tensor product from tuples of sequences back to the base", t_equivalence});
}

}  // namespace parsum::suites
