#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parsum/fault.hpp"
#include "parsum/parsumcat.hpp"
#include "parsum/phi.hpp"

namespace parsum {

// Finite tuples of objects of a parsummable category. A morphism is stored by
// its representative relative to canonical_interleave on both ends.
template <ParsummableCategory P>
class Sigma {
 public:
  using Base = P;
  using Entry = typename P::Object;
  using Object = std::vector<Entry>;

  struct Morphism {
    Object src;
    Object dst;
    typename P::Morphism f;  // canon(|src|)_* src -> canon(|dst|)_* dst
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  Sigma() = default;
  explicit Sigma(P base) : base_(std::move(base)) {}

  const P& base() const { return base_; }
  std::string name() const { return "Sigma(" + base_.name() + ")"; }

  Entry realize(const Object& x) const { return phi_star(base_, canonical_interleave(x.size()), x); }

  // The class of f : phi_* src -> psi_* dst, moved to the canonical representative.
  Morphism make_morphism(const ApInjection& psi, const typename P::Morphism& f, const ApInjection& phi,
                         const Object& src, const Object& dst) const {
    ApInjection ps = relabel_consecutive(psi), ph = relabel_consecutive(phi);
    if (ph.size() != src.size() || ps.size() != dst.size())
      throw Error(name() + ": injection arity does not match the tuple length");
    if (!(base_.dom(f) == phi_star(base_, ph, src)) || !(base_.cod(f) == phi_star(base_, ps, dst)))
      throw Error(name() + ": representative does not match the given injections");
    ApInjection cm = canonical_interleave(src.size()), cn = canonical_interleave(dst.size());
    auto g = base_.compose(bracket_gen(base_, cn, ps, dst), base_.compose(f, bracket_gen(base_, ph, cm, src)));
    return {src, dst, std::move(g)};
  }

  Morphism lift(Object src, Object dst, typename P::Morphism f) const {
    if (!(base_.dom(f) == realize(src)) || !(base_.cod(f) == realize(dst)))
      throw Error(name() + ": representative does not match the canonical ends");
    return {std::move(src), std::move(dst), std::move(f)};
  }

  Object dom(const Morphism& a) const { return a.src; }
  Object cod(const Morphism& a) const { return a.dst; }
  Morphism identity(const Object& x) const { return {x, x, base_.identity(realize(x))}; }

  Morphism compose(const Morphism& b, const Morphism& a) const {
    if (!(a.dst == b.src)) throw Error(name() + ": composing " + show(b) + " after " + show(a));
    return {a.src, b.dst, base_.compose(b.f, a.f)};
  }

  Object unit() const { return {}; }

  Object tensor_obj(const Object& x, const Object& y) const {
    Object out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  }

  // Each factor is re-expressed along its block of canonical_interleave(total
  // arity); the sum of the two is then already canonical.
  Morphism tensor_mor(const Morphism& a, const Morphism& b) const {
    std::size_t m = a.src.size(), m2 = b.src.size(), n = a.dst.size(), n2 = b.dst.size();
    ApInjection phi = canonical_interleave(m + m2), psi = canonical_interleave(n + n2);
    auto along = [&](const Morphism& x, const ApInjection& source_block, const ApInjection& target_block) {
      ApInjection cm = canonical_interleave(x.src.size()), cn = canonical_interleave(x.dst.size());
      return base_.compose(bracket_gen(base_, target_block, cn, x.dst),
                           base_.compose(x.f, bracket_gen(base_, cm, source_block, x.src)));
    };
    auto left = along(a, slice(phi, 0, m), slice(psi, 0, n));
    auto right = along(b, slice(phi, m, m2), slice(psi, n, n2));
    return {tensor_obj(a.src, b.src), tensor_obj(a.dst, b.dst), base_.sum_mor(left, right)};
  }

  Morphism braiding(const Object& x, const Object& y) const {
    Object xy = tensor_obj(x, y);
    ApInjection phi = canonical_interleave(xy.size());
    ApInjection rotated = fault_active(Fault::sigma_braiding) ? phi : bar(phi, x.size());
    return make_morphism(rotated, base_.identity(realize(xy)), phi, xy, tensor_obj(y, x));
  }

  std::string show(const Object& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += ", ";
      s += base_.show(x[i]);
    }
    return s + ")";
  }

  std::string show(const Morphism& a) const {
    return "[" + show(a.src) + " -> " + show(a.dst) + "; " + base_.show(a.f) + "]";
  }

 private:
  P base_;
};

template <ParsummableCategory P, ParsummableCategory Q>
StrictSymMonFunctor<Sigma<P>, Sigma<Q>> sigma_functor(const ParSumMorphism<P, Q>& F) {
  auto obj = [F](const typename Sigma<P>::Object& x) {
    typename Sigma<Q>::Object out;
    for (const auto& e : x) out.push_back(F.obj(e));
    return out;
  };
  return {"Sigma(" + F.name + ")", obj, [obj, F](const typename Sigma<P>::Morphism& a) {
            return typename Sigma<Q>::Morphism{obj(a.src), obj(a.dst), F.mor(a.f)};
          }};
}

// The symmetric monoidal structure on the underlying category of P induced by
// an injection mu over {1,2}.
template <ParsummableCategory P>
struct MuStar {
  using Object = typename P::Object;
  using Morphism = typename P::Morphism;

  P cat;
  ApInjection mu = canonical_interleave(2);

  const ApRow& first() const { return mu.rows()[0]; }
  const ApRow& second() const { return mu.rows()[1]; }

  Object unit() const { return cat.zero(); }
  Object tensor(const Object& x, const Object& y) const { return phi_star(cat, mu, {x, y}); }
  Morphism tensor_mor(const Morphism& f, const Morphism& g) const { return phi_star_mor(cat, mu, {f, g}); }

  // 0 (x) X -> X
  Morphism left_unitor(const Object& x) const { return bracket(cat, ApRow::identity(), second(), x); }
  // X (x) 0 -> X
  Morphism right_unitor(const Object& x) const { return bracket(cat, ApRow::identity(), first(), x); }

  Morphism symmetry(const Object& x, const Object& y) const {
    ApInjection swapped({1, 2}, {second(), first()});
    if (fault_active(Fault::mu_symmetry)) swapped = mu;
    return bracket_gen(cat, swapped, mu, {x, y});
  }

  // (X (x) Y) (x) Z -> X (x) (Y (x) Z)
  Morphism associator(const Object& x, const Object& y, const Object& z) const {
    ApInjection left_nested({1, 2, 3}, {compose(first(), first()), compose(first(), second()), second()});
    ApInjection right_nested({1, 2, 3}, {first(), compose(second(), first()), compose(second(), second())});
    return bracket_gen(cat, right_nested, left_nested, {x, y, z});
  }
};

// X |-> (X) from the mu_* structure to Sigma, with its structure isomorphisms.
template <ParsummableCategory P>
struct NuTilde {
  using SigmaCat = Sigma<P>;

  SigmaCat sigma;
  ApInjection mu = canonical_interleave(2);

  const P& base() const { return sigma.base(); }
  static ApInjection one() { return ApInjection::single(ApRow::identity()); }

  typename SigmaCat::Object obj(const typename P::Object& x) const { return {x}; }

  typename SigmaCat::Morphism mor(const typename P::Morphism& f) const {
    return sigma.make_morphism(one(), f, one(), {base().dom(f)}, {base().cod(f)});
  }

  // epsilon -> (0)
  typename SigmaCat::Morphism unit_iso() const {
    return sigma.make_morphism(one(), base().identity(base().zero()), ApInjection(), {}, {base().zero()});
  }

  // (X, Y) -> (X (x)_mu Y)
  typename SigmaCat::Morphism nabla(const typename P::Object& x, const typename P::Object& y) const {
    auto xy = phi_star(base(), mu, {x, y});
    return sigma.make_morphism(one(), base().identity(xy), mu, {x, y}, {xy});
  }

  // Inverse on hom-sets: canonical_interleave(1) is the identity row.
  typename P::Morphism hom_inverse(const typename SigmaCat::Morphism& a) const {
    if (a.src.size() != 1 || a.dst.size() != 1) throw Error("hom_inverse: expected 1-tuples");
    return a.f;
  }

  // (phi_* X) -> X for phi the canonical interleave of |X|.
  typename SigmaCat::Morphism collapse_inverse(const typename SigmaCat::Object& xs) const {
    ApInjection phi = canonical_interleave(xs.size());
    auto px = phi_star(base(), phi, xs);
    return sigma.make_morphism(phi, base().identity(px), one(), {px}, xs);
  }

  // X -> (phi_* X)
  typename SigmaCat::Morphism collapse(const typename SigmaCat::Object& xs) const {
    ApInjection phi = canonical_interleave(xs.size());
    auto px = phi_star(base(), phi, xs);
    return sigma.make_morphism(one(), base().identity(px), phi, xs, {px});
  }
};

// Sigma Phi D -> D: total tensor on objects; on morphisms, the underlying
// morphism of the representative relative to monotone injections.
template <PermutativeCategory C>
struct TFunctor {
  using Source = Sigma<Phi<C>>;

  Source source;

  const Phi<C>& phi() const { return source.base(); }
  const C& target() const { return source.base().base(); }

  std::vector<FinSet> shape(const typename Source::Object& x) const {
    std::vector<FinSet> out;
    for (const auto& e : x) out.push_back(phi().support(e));
    return out;
  }

  typename C::Object obj(const typename Source::Object& x) const {
    typename C::Object out = target().unit();
    for (const auto& e : x) out = target().tensor_obj(out, phi().total(e));
    return out;
  }

  typename C::Morphism mor(const typename Source::Morphism& a) const {
    if (fault_active(Fault::t_monotone)) return a.f.f;
    ApInjection from = monotone_for(shape(a.src)), to = monotone_for(shape(a.dst));
    ApInjection cm = canonical_interleave(a.src.size()), cn = canonical_interleave(a.dst.size());
    auto g = phi().compose(bracket_gen(phi(), to, cn, a.dst), phi().compose(a.f, bracket_gen(phi(), cm, from, a.src)));
    return g.f;
  }

  typename Source::Morphism hom_inverse(const typename Source::Object& src, const typename Source::Object& dst,
                                        const typename C::Morphism& f) const {
    ApInjection from = monotone_for(shape(src)), to = monotone_for(shape(dst));
    auto lifted = phi().lift(phi_star(phi(), from, src), phi_star(phi(), to, dst), f);
    return source.make_morphism(to, lifted, from, src, dst);
  }

  typename Source::Object object_preimage(const typename C::Object& x) const { return {phi().make({{1, x}})}; }

  Functor<Source, C> as_functor() const {
    TFunctor self = *this;
    return {"T", [self](const typename Source::Object& x) { return self.obj(x); },
            [self](const typename Source::Morphism& a) { return self.mor(a); }};
  }
};

}  // namespace parsum
