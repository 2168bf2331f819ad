#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parsum/fault.hpp"
#include "parsum/laws.hpp"
#include "parsum/parsumcat.hpp"
#include "parsum/phi.hpp"
#include "parsum/random.hpp"
#include "parsum/sampling.hpp"
#include "parsum/sigma.hpp"

namespace parsum {

// Componentwise structure on pairs; the support is the union.
template <ParsummableCategory P1, ParsummableCategory P2>
class Product {
 public:
  using First = P1;
  using Second = P2;
  using Object = std::pair<typename P1::Object, typename P2::Object>;
  using Morphism = std::pair<typename P1::Morphism, typename P2::Morphism>;

  Product() = default;
  Product(P1 a, P2 b) : a_(std::move(a)), b_(std::move(b)) {}

  const P1& first() const { return a_; }
  const P2& second() const { return b_; }
  std::string name() const { return a_.name() + " x " + b_.name(); }

  Object dom(const Morphism& f) const { return {a_.dom(f.first), b_.dom(f.second)}; }
  Object cod(const Morphism& f) const { return {a_.cod(f.first), b_.cod(f.second)}; }
  Morphism identity(const Object& x) const { return {a_.identity(x.first), b_.identity(x.second)}; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    return {a_.compose(g.first, f.first), b_.compose(g.second, f.second)};
  }

  FinSet support(const Object& x) const { return a_.support(x.first).unite(b_.support(x.second)); }
  Object act_obj(const ApRow& u, const Object& x) const { return {a_.act_obj(u, x.first), b_.act_obj(u, x.second)}; }
  Morphism u_circ(const ApRow& u, const Object& x) const { return {a_.u_circ(u, x.first), b_.u_circ(u, x.second)}; }
  Morphism u_circ_inverse(const ApRow& u, const Object& x) const {
    return {parsum::u_circ_inverse(a_, u, x.first), parsum::u_circ_inverse(b_, u, x.second)};
  }

  Object zero() const { return {a_.zero(), b_.zero()}; }
  Object sum_obj(const Object& x, const Object& y) const {
    return {a_.sum_obj(x.first, y.first), b_.sum_obj(x.second, y.second)};
  }
  Morphism sum_mor(const Morphism& f, const Morphism& g) const {
    return {a_.sum_mor(f.first, g.first), b_.sum_mor(f.second, g.second)};
  }

  std::string show(const Object& x) const { return "<" + a_.show(x.first) + ", " + b_.show(x.second) + ">"; }
  std::string show(const Morphism& f) const { return "<" + a_.show(f.first) + ", " + b_.show(f.second) + ">"; }

  ParSumMorphism<Product, P1> project_first() const {
    return {"pr1", [](const Object& x) { return x.first; }, [](const Morphism& f) { return f.first; }};
  }
  ParSumMorphism<Product, P2> project_second() const {
    return {"pr2", [](const Object& x) { return x.second; }, [](const Morphism& f) { return f.second; }};
  }

 private:
  P1 a_;
  P2 b_;
};

template <ParsummableCategory P1, ParsummableCategory P2, ParsummableCategory Q1, ParsummableCategory Q2>
Functor<Product<P1, P2>, Product<Q1, Q2>> product_functor(const Functor<P1, Q1>& g, const Functor<P2, Q2>& h) {
  return {g.name + " x " + h.name,
          [g, h](const typename Product<P1, P2>::Object& x) { return std::pair{g.obj(x.first), h.obj(x.second)}; },
          [g, h](const typename Product<P1, P2>::Morphism& f) { return std::pair{g.mor(f.first), h.mor(f.second)}; }};
}

// Objects of Src, morphisms X -> Y the Dst-morphisms FX -> FY.
template <ParsummableCategory Src, ParsummableCategory Dst>
class FStar {
 public:
  using Object = typename Src::Object;
  struct Morphism {
    Object src;
    Object dst;
    typename Dst::Morphism f;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  FStar(Src src, Dst dst, Functor<Src, Dst> F) : src_(std::move(src)), dst_(std::move(dst)), F_(std::move(F)) {}

  const Src& source() const { return src_; }
  const Dst& target() const { return dst_; }
  const Functor<Src, Dst>& functor() const { return F_; }
  std::string name() const { return "(" + F_.name + ")_*(" + src_.name() + ")"; }

  Morphism lift(Object x, Object y, typename Dst::Morphism h) const {
    if (!(dst_.dom(h) == F_.obj(x)) || !(dst_.cod(h) == F_.obj(y)))
      throw Error(name() + ": morphism does not run between the images");
    return {std::move(x), std::move(y), std::move(h)};
  }

  Object dom(const Morphism& f) const { return f.src; }
  Object cod(const Morphism& f) const { return f.dst; }
  Morphism identity(const Object& x) const { return {x, x, dst_.identity(F_.obj(x))}; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.dst == g.src)) throw Error(name() + ": composing " + show(g) + " after " + show(f));
    return {f.src, g.dst, dst_.compose(g.f, f.f)};
  }

  FinSet support(const Object& x) const { return src_.support(x); }
  Object act_obj(const ApRow& u, const Object& x) const { return src_.act_obj(u, x); }
  Morphism u_circ(const ApRow& u, const Object& x) const {
    return {x, src_.act_obj(u, x), F_.mor(src_.u_circ(u, x))};
  }
  Morphism u_circ_inverse(const ApRow& u, const Object& x) const {
    return {src_.act_obj(u, x), x, F_.mor(parsum::u_circ_inverse(src_, u, x))};
  }

  Object zero() const { return src_.zero(); }
  Object sum_obj(const Object& x, const Object& y) const { return src_.sum_obj(x, y); }
  Morphism sum_mor(const Morphism& f, const Morphism& g) const {
    return {src_.sum_obj(f.src, g.src), src_.sum_obj(f.dst, g.dst), dst_.sum_mor(f.f, g.f)};
  }

  std::string show(const Object& x) const { return src_.show(x); }
  std::string show(const Morphism& f) const {
    return "(" + src_.show(f.src) + " -> " + src_.show(f.dst) + "; " + dst_.show(f.f) + ")";
  }

  // I : Src -> F_*Src
  ParSumMorphism<Src, FStar> inclusion() const {
    Functor<Src, Dst> F = F_;
    Src src = src_;
    return {"I", [](const Object& x) { return x; },
            [F, src](const typename Src::Morphism& f) { return Morphism{src.dom(f), src.cod(f), F.mor(f)}; }};
  }

  // F^ : F_*Src -> Dst, with F = F^ o I.
  Functor<FStar, Dst> hat() const {
    Functor<Src, Dst> F = F_;
    return {F_.name + "^", [F](const Object& x) { return F.obj(x); }, [](const Morphism& f) { return f.f; }};
  }

  // F^ is fully faithful by construction; it is an equivalence whenever F is
  // essentially surjective, with the same isomorphisms.
  EquivalenceWitness<FStar, Dst> hat_witness(const EquivalenceWitness<Src, Dst>& f_witness) const {
    return {[](const Object& x, const Object& y, const typename Dst::Morphism& h) { return Morphism{x, y, h}; },
            f_witness.preimage, f_witness.iso, f_witness.iso_inverse};
  }

 private:
  Src src_;
  Dst dst_;
  Functor<Src, Dst> F_;
};

// The map F_*C -> F'_*C' induced by G : C -> C' and H : D -> D' with H F = F' G.
template <ParsummableCategory C, ParsummableCategory D, ParsummableCategory C2, ParsummableCategory D2>
ParSumMorphism<FStar<C, D>, FStar<C2, D2>> fstar_functor(const Functor<C, C2>& g, const Functor<D, D2>& h) {
  using Target = FStar<C2, D2>;
  return {"(" + g.name + "," + h.name + ")_*", [g](const typename C::Object& x) { return g.obj(x); },
          [g, h](const typename FStar<C, D>::Morphism& f) {
            return typename Target::Morphism{g.obj(f.src), g.obj(f.dst), h.mor(f.f)};
          }};
}

// Full subcategory of Phi(Sigma(P)) on objects whose entries are all 1-tuples.
template <ParsummableCategory P>
class Theta : public Phi<Sigma<P>> {
 public:
  using Base = Phi<Sigma<P>>;
  using typename Base::Morphism;
  using typename Base::Object;

  Theta() = default;
  explicit Theta(P inner) : Base(Sigma<P>(inner)), inner_(std::move(inner)) {}

  const P& inner() const { return inner_; }
  std::string name() const { return "Theta(" + inner_.name() + ")"; }

  // <A, X>: position a carries the 1-tuple (X_a).
  Object make_theta(const FinSet& a, const std::vector<typename P::Object>& xs) const {
    if (a.size() != xs.size()) throw Error(name() + ": index set and family differ in size");
    std::map<Nat, typename Sigma<P>::Object> entries;
    for (std::size_t k = 0; k < xs.size(); ++k) entries.emplace(a[k], typename Sigma<P>::Object{xs[k]});
    return this->make(entries);
  }

  bool contains(const Object& x) const {
    for (const auto& [i, e] : x.entries)
      if (e.size() != 1) return false;
    return true;
  }

  // X_a for a in A, in increasing order of a.
  std::vector<typename P::Object> entries_of(const Object& x) const {
    if (!contains(x)) throw Error(name() + ": entry is not a 1-tuple in " + this->show(x));
    std::vector<typename P::Object> out;
    for (const auto& [i, e] : x.entries) out.push_back(e.front());
    return out;
  }

 private:
  P inner_;
};

// Theta(H) for a parsummable morphism H, as the restriction of Phi(Sigma(H)).
template <ParsummableCategory P, ParsummableCategory Q>
ParSumMorphism<Theta<P>, Theta<Q>> theta_functor(const Theta<Q>& target, const ParSumMorphism<P, Q>& h) {
  auto inner = phi_functor<Sigma<P>, Sigma<Q>>(static_cast<const Phi<Sigma<Q>>&>(target), sigma_functor(h));
  return {"Theta(" + h.name + ")", inner.obj, inner.mor};
}

// S : Theta(P) -> P, <A, X> |-> (phi|_A)_* X for a global injection phi given row by row.
template <ParsummableCategory P>
struct SFunctor {
  using Source = Theta<P>;

  Source theta;
  std::function<ApRow(Nat)> row = dyadic_row;

  const P& target() const { return theta.inner(); }
  const Sigma<P>& sigma() const { return theta.base(); }

  // Rows phi(a, -) for the elements a of A in increasing order, labelled 1..|A|.
  ApInjection restricted(const FinSet& a) const {
    std::vector<Nat> labels;
    std::vector<ApRow> rows;
    for (std::size_t k = 0; k < a.size(); ++k) {
      labels.push_back(static_cast<Nat>(k + 1));
      rows.push_back(row(a[k]));
    }
    return ApInjection(std::move(labels), std::move(rows));
  }

  typename P::Object obj(const typename Source::Object& x) const {
    return phi_star(target(), restricted(theta.support(x)), theta.entries_of(x));
  }

  // Moves the canonical representative to the one relative to phi|_A, phi|_B.
  typename P::Morphism mor(const typename Source::Morphism& a) const {
    if (fault_active(Fault::s_conjugation)) return a.f.f;
    auto xs = theta.entries_of(a.src), ys = theta.entries_of(a.dst);
    const P& p = target();
    auto in = bracket_gen(p, canonical_interleave(xs.size()), restricted(theta.support(a.src)), xs);
    auto out = bracket_gen(p, restricted(theta.support(a.dst)), canonical_interleave(ys.size()), ys);
    return p.compose(out, p.compose(a.f.f, in));
  }

  typename Source::Morphism hom_inverse(const typename Source::Object& x, const typename Source::Object& y,
                                        const typename P::Morphism& h) const {
    auto xs = theta.entries_of(x), ys = theta.entries_of(y);
    auto s = sigma().make_morphism(restricted(theta.support(y)), h, restricted(theta.support(x)), xs, ys);
    return theta.lift(x, y, s);
  }

  typename Source::Object preimage(const typename P::Object& y) const { return theta.make_theta(FinSet{1}, {y}); }
  // S<{1}, Y> = phi(1,-)_* Y -> Y
  typename P::Morphism essential_iso(const typename P::Object& y) const {
    return bracket(target(), ApRow::identity(), row(1), y);
  }
  typename P::Morphism essential_iso_inverse(const typename P::Object& y) const {
    return bracket(target(), row(1), ApRow::identity(), y);
  }

  SumPreservingFunctor<Source, P> as_functor() const {
    SFunctor self = *this;
    return {"S", [self](const typename Source::Object& x) { return self.obj(x); },
            [self](const typename Source::Morphism& a) { return self.mor(a); }};
  }

  EquivalenceWitness<Source, P> witness() const {
    SFunctor self = *this;
    return {[self](const auto& x, const auto& y, const auto& h) { return self.hom_inverse(x, y, h); },
            [self](const auto& y) { return self.preimage(y); },
            [self](const auto& y) { return self.essential_iso(y); },
            [self](const auto& y) { return self.essential_iso_inverse(y); }};
  }
};

// Theta(P) -> Phi(Sigma(P)) and its essential-surjectivity data: an object Z
// is reached from <supp Z, i |-> realization of Z_i>.
template <ParsummableCategory P>
struct ThetaInclusion {
  using Source = Theta<P>;
  using Target = Phi<Sigma<P>>;

  Source theta;

  const Target& target() const { return theta; }

  ParSumMorphism<Source, Target> as_functor() const {
    return {"incl", [](const typename Source::Object& x) { return x; },
            [](const typename Source::Morphism& f) { return f; }};
  }

  typename Source::Object preimage(const typename Target::Object& z) const {
    std::vector<typename P::Object> xs;
    for (const auto& [i, e] : z.entries) xs.push_back(theta.base().realize(e));
    return theta.make_theta(target().support(z), xs);
  }

  // Tensor product over the entries of (phi_* Z_i) -> Z_i, or its inverse.
  typename Target::Morphism iso(const typename Target::Object& z, bool inverse) const {
    NuTilde<P> nu{theta.base()};
    std::vector<typename Sigma<P>::Morphism> parts;
    for (const auto& [i, e] : z.entries) parts.push_back(inverse ? nu.collapse(e) : nu.collapse_inverse(e));
    auto f = tensor_many_mor(theta.base(), parts);
    auto pre = preimage(z);
    return inverse ? target().lift(z, pre, f) : target().lift(pre, z, f);
  }

  EquivalenceWitness<Source, Target> witness() const {
    ThetaInclusion self = *this;
    return {[](const auto&, const auto&, const typename Target::Morphism& h) { return h; },
            [self](const auto& z) { return self.preimage(z); },
            [self](const auto& z) { return self.iso(z, false); },
            [self](const auto& z) { return self.iso(z, true); }};
  }
};

// Cyl(F) = (F_mu)_*(C x D) with F_mu(X, Y) = mu_*(FX, Y), and its three maps.
template <ParsummableCategory C, ParsummableCategory D>
struct Cylinder {
  using Prod = Product<C, D>;
  using Cyl = FStar<Prod, D>;

  C source;
  D target;
  Functor<C, D> F;
  ApInjection mu = canonical_interleave(2);

  const ApRow& mu1() const { return mu.rows()[0]; }
  const ApRow& mu2() const { return mu.rows()[1]; }

  Functor<Prod, D> f_mu() const {
    Cylinder self = *this;
    return {F.name + "_mu",
            [self](const typename Prod::Object& x) {
              return phi_star(self.target, self.mu, {self.F.obj(x.first), x.second});
            },
            [self](const typename Prod::Morphism& f) {
              return phi_star_mor(self.target, self.mu, {self.F.mor(f.first), f.second});
            }};
  }

  Cyl cyl() const { return Cyl(Prod(source, target), target, f_mu()); }

  ParSumMorphism<C, Cyl> i1() const {
    Cyl k = cyl();
    C c = source;
    D d = target;
    return {"I1", [d](const typename C::Object& x) { return typename Prod::Object{x, d.zero()}; },
            [k, c, d](const typename C::Morphism& f) {
              return k.inclusion().mor(typename Prod::Morphism{f, d.identity(d.zero())});
            }};
  }

  ParSumMorphism<D, Cyl> i2() const {
    Cyl k = cyl();
    C c = source;
    D d = target;
    return {"I2", [c](const typename D::Object& y) { return typename Prod::Object{c.zero(), y}; },
            [k, c](const typename D::Morphism& g) {
              return k.inclusion().mor(typename Prod::Morphism{c.identity(c.zero()), g});
            }};
  }

  Functor<Cyl, D> hat() const { return cyl().hat(); }

  // I2 is fully faithful through [1, mu2] and essentially surjective onto Z
  // via I2(F_mu Z).
  EquivalenceWitness<D, Cyl> i2_witness() const {
    Cylinder self = *this;
    return {[self](const typename D::Object& y, const typename D::Object& y2, const typename Cyl::Morphism& h) {
              const D& d = self.target;
              return d.compose(bracket(d, ApRow::identity(), self.mu2(), y2),
                               d.compose(h.f, bracket(d, self.mu2(), ApRow::identity(), y)));
            },
            [self](const typename Prod::Object& z) { return self.f_mu().obj(z); },
            [self](const typename Prod::Object& z) {
              auto w = self.f_mu().obj(z);
              return typename Cyl::Morphism{self.i2().obj(w), z,
                                            bracket(self.target, ApRow::identity(), self.mu2(), w)};
            },
            [self](const typename Prod::Object& z) {
              auto w = self.f_mu().obj(z);
              return typename Cyl::Morphism{z, self.i2().obj(w),
                                            bracket(self.target, self.mu2(), ApRow::identity(), w)};
            }};
  }

  // F^_mu reaches Y from (0, Y) through [1, mu2]_Y.
  EquivalenceWitness<Cyl, D> hat_witness() const {
    Cylinder self = *this;
    return {[](const typename Prod::Object& x, const typename Prod::Object& y, const typename D::Morphism& h) {
              return typename Cyl::Morphism{x, y, h};
            },
            [self](const typename D::Object& y) { return typename Prod::Object{self.source.zero(), y}; },
            [self](const typename D::Object& y) { return bracket(self.target, ApRow::identity(), self.mu2(), y); },
            [self](const typename D::Object& y) { return bracket(self.target, self.mu2(), ApRow::identity(), y); }};
  }

  // From witnesses for F: h : mu1_* FX -> mu1_* FX' is pulled back along
  // [1, mu1]; Z is reached from the F-preimage W of F_mu Z through
  // mu1_* FW -> FW -> F_mu Z.
  EquivalenceWitness<C, Cyl> i1_witness(const EquivalenceWitness<C, D>& fw) const {
    Cylinder self = *this;
    return {[self, fw](const typename C::Object& x, const typename C::Object& x2, const typename Cyl::Morphism& h) {
              const D& d = self.target;
              auto fx = self.F.obj(x), fx2 = self.F.obj(x2);
              auto moved = d.compose(bracket(d, ApRow::identity(), self.mu1(), fx2),
                                     d.compose(h.f, bracket(d, self.mu1(), ApRow::identity(), fx)));
              return fw.hom_inverse(x, x2, moved);
            },
            [self, fw](const typename Prod::Object& z) { return fw.preimage(self.f_mu().obj(z)); },
            [self, fw](const typename Prod::Object& z) {
              const D& d = self.target;
              auto target_obj = self.f_mu().obj(z);
              auto w = fw.preimage(target_obj);
              auto h = d.compose(fw.iso(target_obj), bracket(d, ApRow::identity(), self.mu1(), self.F.obj(w)));
              return typename Cyl::Morphism{self.i1().obj(w), z, h};
            },
            [self, fw](const typename Prod::Object& z) {
              const D& d = self.target;
              auto target_obj = self.f_mu().obj(z);
              auto w = fw.preimage(target_obj);
              auto h =
                  d.compose(bracket(d, self.mu1(), ApRow::identity(), self.F.obj(w)), fw.iso_inverse(target_obj));
              return typename Cyl::Morphism{z, self.i1().obj(w), h};
            }};
  }
};

// Samplers for the constructions above. Rows acting on Theta-positions stay
// small, since S spreads position a over the progression of phi(a, -).

template <ParsummableCategory P>
struct Sampler<Theta<P>> {
  Theta<P> cat;
  Sampler<Sigma<P>> tuples;
  Nat max_position = 5;
  std::size_t max_support = 3;

  Sampler(Theta<P> theta, Sampler<P> inner) : cat(theta), tuples{theta.base(), std::move(inner)} {}

  const Sampler<P>& inner() const { return tuples.base; }

  FinSet positions(std::size_t n, Rng& rng) const {
    Nat room = std::max<Nat>(max_position, static_cast<Nat>(n));
    std::vector<Nat> slots = FinSet::range(1, room).elements();
    for (std::size_t i = slots.size(); i > 1; --i)
      std::swap(slots[i - 1], slots[static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(i) - 1))]);
    slots.resize(n);
    return FinSet(slots);
  }

  typename Theta<P>::Object object(Rng& rng) const {
    FinSet a = random_subset(rng, FinSet::range(1, max_position), max_support);
    std::vector<typename P::Object> xs;
    for (std::size_t k = 0; k < a.size(); ++k) xs.push_back(inner().object(rng));
    return cat.make_theta(a, xs);
  }

  typename Theta<P>::Morphism morphism_from(const typename Theta<P>::Object& x, Rng& rng) const {
    auto g = tuples.morphism_from(cat.entries_of(x), rng);
    auto y = cat.make_theta(positions(g.dst.size(), rng), g.dst);
    return cat.lift(x, y, g);
  }

  typename Theta<P>::Morphism automorphism(const typename Theta<P>::Object& x, Rng& rng) const {
    return cat.lift(x, x, tuples.automorphism(cat.entries_of(x), rng));
  }

  ApRow row(Rng& rng) const { return small_row(rng); }
};

template <ParsummableCategory P1, ParsummableCategory P2>
struct Sampler<Product<P1, P2>> {
  Sampler<P1> first;
  Sampler<P2> second;

  typename Product<P1, P2>::Object object(Rng& rng) const {
    auto a = first.object(rng);
    return {a, second.object(rng)};
  }
  typename Product<P1, P2>::Morphism morphism_from(const typename Product<P1, P2>::Object& x, Rng& rng) const {
    auto a = first.morphism_from(x.first, rng);
    return {a, second.morphism_from(x.second, rng)};
  }
  typename Product<P1, P2>::Morphism automorphism(const typename Product<P1, P2>::Object& x, Rng& rng) const {
    auto a = first.automorphism(x.first, rng);
    return {a, second.automorphism(x.second, rng)};
  }
  ApRow row(Rng& rng) const { return small_row(rng); }
};

template <ParsummableCategory Src, ParsummableCategory Dst>
struct Sampler<FStar<Src, Dst>> {
  FStar<Src, Dst> cat;
  Sampler<Src> source;
  Sampler<Dst> target;

  typename Src::Object object(Rng& rng) const { return source.object(rng); }

  // F(f) precomposed with an automorphism of FX, so most samples are not in the image of I.
  typename FStar<Src, Dst>::Morphism morphism_from(const typename Src::Object& x, Rng& rng) const {
    auto f = source.morphism_from(x, rng);
    const auto& F = cat.functor();
    auto h = cat.target().compose(F.mor(f), target.automorphism(F.obj(x), rng));
    return cat.lift(x, cat.source().cod(f), h);
  }

  typename FStar<Src, Dst>::Morphism automorphism(const typename Src::Object& x, Rng& rng) const {
    return cat.lift(x, x, target.automorphism(cat.functor().obj(x), rng));
  }

  ApRow row(Rng& rng) const { return source.row(rng); }
};

}  // namespace parsum
