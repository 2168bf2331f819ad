#include "context.hpp"
#include "parsum/cylinder.hpp"
#include "parsum/laws.hpp"

namespace parsum::suites {

namespace {

using detail::same;

// F and G agree on sampled objects and morphisms of c.
template <class C, class D, class S>
PropertyResult functors_agree(const std::string& name, const std::string& law, const Functor<C, D>& F,
                              const Functor<C, D>& G, const C& c, const D& d, const S& s, Rng& rng,
                              std::size_t cases) {
  return run_property(name, law, cases, rng, [&](Rng& r, Witness& w) {
    auto f = s.morphism_from(s.object(r), r);
    w.term("f", c.show(f));
    return same(w, d, F.name + " X", F.obj(c.dom(f)), G.name + " X", G.obj(c.dom(f))) &&
           same(w, d, F.name + " f", F.mor(f), G.name + " f", G.mor(f));
  });
}

// X |-> X + <1000: unit tuple entry>, f |-> f + id: a functor that moves the zero.
template <PermutativeCategory B>
Functor<Phi<B>, Phi<B>> pad_with_constant(const Phi<B>& p, const typename B::Object& e) {
  auto extra = p.make({{1000, e}});
  return {"pad", [p, extra](const typename Phi<B>::Object& x) { return p.sum_obj(x, extra); },
          [p, extra](const typename Phi<B>::Morphism& f) { return p.sum_mor(f, p.identity(extra)); }};
}

SuiteResult cylinder(const SuiteConfig& config) {
  Context ctx(config, "cylinder", "the cylinder of S and its three maps");
  if (!ctx.wants("symcat")) return ctx.finish();
  using P = Phi<SymCat>;
  using Th = Theta<P>;
  std::size_t n = ctx.cases();
  Rng& rng = ctx.rng();

  P p;
  Sampler<P> ps{p, {}};
  Th theta(p);
  Sampler<Th> ts(theta, ps);
  SFunctor<P> S{theta};
  auto s_fun = S.as_functor();

  ctx.add("S", check_sum_preserving(s_fun, theta, p, ts, rng, n));
  ctx.add("S", check_equivalence(s_fun, S.witness(), theta, p, ts, ps, rng, n));
  ctx.add("S", run_cases("S-empty", "S<empty set, empty family> = 0", 1, [&](std::size_t, Witness& w) {
            return same(w, p, "S<empty>", S.obj(theta.make_theta(FinSet{}, {})), "0", p.zero());
          }));

  Cylinder<Th, P> cyl{theta, p, s_fun};
  auto k = cyl.cyl();
  using Cyl = decltype(k);
  Sampler<Cyl> ks{k, {ts, ps}, ps};
  ctx.add("Cyl", check_parsummable(k, ks, rng, n));
  ctx.add("Cyl", check_parsum_morphism(cyl.i1(), theta, k, ts, rng, n));
  ctx.add("Cyl", check_parsum_morphism(cyl.i2(), p, k, ps, rng, n));
  ctx.add("Cyl", check_sum_preserving(cyl.hat(), k, p, ks, rng, n));

  ctx.add("Cyl", run_property("triangle-first", "S^_mu(I1 f) = (mu_1)_* S f", n, rng, [&](Rng& r, Witness& w) {
            auto f = ts.morphism_from(ts.object(r), r);
            w.term("f", theta.show(f));
            return same(w, p, "S^ I1 f", cyl.hat().mor(cyl.i1().mor(f)), "mu1_* S f", act_mor(p, cyl.mu1(), S.mor(f)));
          }));
  ctx.add("Cyl", run_property("triangle-second", "S^_mu(I2 g) = (mu_2)_* g", n, rng, [&](Rng& r, Witness& w) {
            auto g = ps.morphism_from(ps.object(r), r);
            w.term("g", p.show(g));
            return same(w, p, "S^ I2 g", cyl.hat().mor(cyl.i2().mor(g)), "mu2_* g", act_mor(p, cyl.mu2(), g));
          }));
  ctx.add("Cyl", check_equivalence(cyl.i1(), cyl.i1_witness(S.witness()), theta, k, ts, ks, rng, n));
  ctx.add("Cyl", check_equivalence(cyl.i2(), cyl.i2_witness(), p, k, ps, ks, rng, n));
  ctx.add("Cyl", check_equivalence(cyl.hat(), cyl.hat_witness(), k, p, ks, ps, rng, n));

  Product<P, P> prod(p, p);
  Sampler<Product<P, P>> prods{ps, ps};
  ctx.add("Product", check_parsummable(prod, prods, rng, n));
  ctx.add("Product", check_parsum_morphism(prod.project_first(), prod, p, prods, rng, n));
  ctx.add("Product", check_parsum_morphism(prod.project_second(), prod, p, prods, rng, n));

  // u_* for a monotone u is sum preserving but not equivariant
  ApRow doubling = ApRow::affine(2, 0);
  Functor<P, P> push{"u_*", [p, doubling](const P::Object& x) { return p.act_obj(doubling, x); },
                     [p, doubling](const P::Morphism& f) { return act_mor(p, doubling, f); }};
  FStar<P, P> pushed(p, p, push);
  Sampler<FStar<P, P>> pushs{pushed, ps, ps};
  ctx.add("FStar", check_sum_preserving(push, p, p, ps, rng, n));
  ctx.add("FStar", check_parsummable(pushed, pushs, rng, n));
  ctx.add("FStar", check_parsum_morphism(pushed.inclusion(), p, pushed, ps, rng, n));
  ctx.add("FStar", check_sum_preserving(pushed.hat(), pushed, p, pushs, rng, n));
  ctx.add("FStar", functors_agree("hat-after-inclusion", "F^ o I = F", compose_functors(pushed.hat(), pushed.inclusion()),
                                  push, p, p, ps, rng, n));

  FStar<P, P> plain(p, p, identity_functor<P>());
  Sampler<FStar<P, P>> plains{plain, ps, ps};
  EquivalenceWitness<P, P> identity_witness{
      [](const P::Object&, const P::Object&, const P::Morphism& h) { return h; },
      [](const P::Object& y) { return y; }, [p](const P::Object& y) { return p.identity(y); },
      [p](const P::Object& y) { return p.identity(y); }};
  ctx.add("FStar(id)", check_parsummable(plain, plains, rng, n));
  ctx.add("FStar(id)", check_equivalence(plain.hat(), plain.hat_witness(identity_witness), plain, p, plains, ps, rng, n));

  auto pad = pad_with_constant(p, SymCat::Object{1});
  ctx.add("pad", run_cases("non-sum-preserving-rejected",
                           "a functor that does not preserve zero or sums fails the sum-preserving check", 1,
                           [&](std::size_t, Witness& w) {
                             auto results = check_sum_preserving(pad, p, p, ps, rng, n);
                             for (const auto& res : results)
                               if (!res.passed && res.counterexample) return true;
                             w.fail("check_sum_preserving accepted the padding functor");
                             return false;
                           }));
  return ctx.finish();
}

// Inclusion and the two cylinder legs for one base instance.
template <PermutativeCategory B>
void zigzag_legs(Context& ctx, const std::string& name, const Phi<B>& p, const Sampler<Phi<B>>& ps) {
  using P = Phi<B>;
  using Th = Theta<P>;
  std::size_t n = ctx.cases();
  Rng& rng = ctx.rng();
  Th theta(p);
  Sampler<Th> ts(theta, ps);

  ThetaInclusion<P> incl{theta};
  const Phi<Sigma<P>>& whole = theta;
  Sampler<Phi<Sigma<P>>> wholes{whole, ts.tuples};
  ctx.add(name, check_parsum_morphism(incl.as_functor(), theta, whole, ts, rng, n));
  ctx.add(name, check_equivalence(incl.as_functor(), incl.witness(), theta, whole, ts, wholes, rng, n));

  SFunctor<P> S{theta};
  Cylinder<Th, P> cyl{theta, p, S.as_functor()};
  auto k = cyl.cyl();
  Sampler<decltype(k)> ks{k, {ts, ps}, ps};
  ctx.add(name, check_parsum_morphism(cyl.i1(), theta, k, ts, rng, n));
  ctx.add(name, check_parsum_morphism(cyl.i2(), p, k, ps, rng, n));
  ctx.add(name, check_equivalence(cyl.i1(), cyl.i1_witness(S.witness()), theta, k, ts, ks, rng, n));
  ctx.add(name, check_equivalence(cyl.i2(), cyl.i2_witness(), p, k, ps, ks, rng, n));
}

SuiteResult zigzag(const SuiteConfig& config) {
  Context ctx(config, "zigzag", "the chain of equivalences and its naturality");
  for_each_phi(ctx, [&](const std::string& name, const auto& p, const auto& ps) { zigzag_legs(ctx, name, p, ps); });
  if (!ctx.wants("symcat")) return ctx.finish();

  using P = Phi<SymCat>;
  using Q = Phi<MatCat<>>;
  std::size_t n = ctx.cases();
  Rng& rng = ctx.rng();
  P p;
  Q q;
  Sampler<P> ps{p, {}};
  Theta<P> tp(p);
  Theta<Q> tq(q);
  Sampler<Theta<P>> ts(tp, ps);
  auto H = phi_functor(q, permutation_matrices());
  auto theta_h = theta_functor(tq, H);
  SFunctor<P> sp{tp};
  SFunctor<Q> sq{tq};
  const std::string nat = "H=" + H.name;

  ctx.add(nat, check_parsum_morphism(theta_h, tp, tq, ts, rng, n));
  ctx.add(nat, functors_agree("S-natural", "S o Theta(H) = H o S", compose_functors(sq.as_functor(), theta_h),
                              compose_functors(H, sp.as_functor()), tp, q, ts, rng, n));
  ThetaInclusion<P> ip{tp};
  ThetaInclusion<Q> iq{tq};
  auto sigma_h = phi_functor<Sigma<P>, Sigma<Q>>(static_cast<const Phi<Sigma<Q>>&>(tq), sigma_functor(H));
  ctx.add(nat, functors_agree("inclusion-natural", "incl o Theta(H) = Phi(Sigma(H)) o incl",
                              compose_functors(iq.as_functor(), theta_h), compose_functors(sigma_h, ip.as_functor()),
                              tp, static_cast<const Phi<Sigma<Q>>&>(tq), ts, rng, n));

  Cylinder<Theta<P>, P> cp{tp, p, sp.as_functor()};
  Cylinder<Theta<Q>, Q> cq{tq, q, sq.as_functor()};
  auto kp = cp.cyl();
  auto kq = cq.cyl();
  Sampler<decltype(kp)> kps{kp, {ts, ps}, ps};
  auto cyl_h = fstar_functor(product_functor(theta_h, H), H);
  Sampler<Product<Theta<P>, P>> pairs{ts, ps};
  ctx.add(nat, functors_agree("cylinder-map-defined", "H o S_mu = S_mu o (Theta(H) x H)",
                              compose_functors(H, cp.f_mu()), compose_functors(cq.f_mu(), product_functor(theta_h, H)),
                              Product<Theta<P>, P>(tp, p), q, pairs, rng, n));
  ctx.add(nat, check_parsum_morphism(cyl_h, kp, kq, kps, rng, n));
  ctx.add(nat, functors_agree("cylinder-first-leg-natural", "Cyl(H) o I1 = I1 o Theta(H)",
                              compose_functors(cyl_h, cp.i1()), compose_functors(cq.i1(), theta_h), tp, kq, ts, rng, n));
  ctx.add(nat, functors_agree("cylinder-second-leg-natural", "Cyl(H) o I2 = I2 o H", compose_functors(cyl_h, cp.i2()),
                              compose_functors(cq.i2(), H), p, kq, ps, rng, n));

  FStar<Theta<P>, P> fp(tp, p, sp.as_functor());
  FStar<Theta<Q>, Q> fq(tq, q, sq.as_functor());
  Sampler<FStar<Theta<P>, P>> fps{fp, ts, ps};
  auto fstar_h = fstar_functor(theta_h, H);
  ctx.add(nat, check_parsum_morphism(fstar_h, fp, fq, fps, rng, n));
  ctx.add(nat, functors_agree("pushforward-inclusion-natural", "(Theta(H), H)_* o I = I o Theta(H)",
                              compose_functors(fstar_h, fp.inclusion()), compose_functors(fq.inclusion(), theta_h), tp,
                              fq, ts, rng, n));
  return ctx.finish();
}

}  // namespace

void add_cylinder_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"cylinder", "the cylinder of S and its three maps", cylinder});
  out.push_back({"zigzag", "the chain of equivalences and its naturality", zigzag});
}

}  // namespace parsum::suites
