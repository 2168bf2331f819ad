#pragma once

#include <vector>

#include "parsum/category.hpp"
#include "parsum/inj.hpp"

namespace parsum {

// Categories with an action of the injection monoid, structure isomorphisms
// u_circ(u, X) : X -> u_*X, finite supports and a partially defined sum.
template <class C>
concept ParsummableCategory = Category<C> &&
    requires(const C& c, const ApRow& u, const typename C::Object& x, const typename C::Morphism& f) {
      { c.support(x) } -> std::convertible_to<FinSet>;
      { c.act_obj(u, x) } -> std::convertible_to<typename C::Object>;
      { c.u_circ(u, x) } -> std::convertible_to<typename C::Morphism>;
      { c.zero() } -> std::convertible_to<typename C::Object>;
      { c.sum_obj(x, x) } -> std::convertible_to<typename C::Object>;
      { c.sum_mor(f, f) } -> std::convertible_to<typename C::Morphism>;
    };

template <class Src, class Dst>
using ParSumMorphism = Functor<Src, Dst>;

template <class Src, class Dst>
using SumPreservingFunctor = Functor<Src, Dst>;

// Inverse of u_circ(u, X): the structure map of any bijection w with
// w(u(s)) = s on supp(X), taken at u_*X. Instances may supply a direct
// computation, which must agree with this one.
template <ParsummableCategory P>
typename P::Morphism u_circ_inverse_generic(const P& c, const ApRow& u, const typename P::Object& x) {
  ApRow w = left_inverse_on(u, c.support(x));
  return c.u_circ(w, c.act_obj(u, x));
}

template <ParsummableCategory P>
typename P::Morphism u_circ_inverse(const P& c, const ApRow& u, const typename P::Object& x) {
  if constexpr (requires { c.u_circ_inverse(u, x); })
    return c.u_circ_inverse(u, x);
  else
    return u_circ_inverse_generic(c, u, x);
}

template <ParsummableCategory P>
typename P::Morphism act_mor(const P& c, const ApRow& u, const typename P::Morphism& f) {
  return c.compose(c.u_circ(u, c.cod(f)), c.compose(f, u_circ_inverse(c, u, c.dom(f))));
}

// [v, u]_X : u_*X -> v_*X
template <ParsummableCategory P>
typename P::Morphism bracket(const P& c, const ApRow& v, const ApRow& u, const typename P::Object& x) {
  return c.compose(c.u_circ(v, x), u_circ_inverse(c, u, x));
}

template <ParsummableCategory P>
typename P::Object phi_star(const P& c, const ApInjection& phi, const std::vector<typename P::Object>& xs) {
  if (xs.size() != phi.size()) throw Error("phi_star: family and injection differ in size");
  typename P::Object out = c.zero();
  for (std::size_t k = 0; k < xs.size(); ++k) out = c.sum_obj(out, c.act_obj(phi.rows()[k], xs[k]));
  return out;
}

template <ParsummableCategory P>
typename P::Morphism phi_star_mor(const P& c, const ApInjection& phi, const std::vector<typename P::Morphism>& fs) {
  if (fs.size() != phi.size()) throw Error("phi_star: family and injection differ in size");
  typename P::Morphism out = c.identity(c.zero());
  for (std::size_t k = 0; k < fs.size(); ++k) out = c.sum_mor(out, act_mor(c, phi.rows()[k], fs[k]));
  return out;
}

// [psi, phi]_X : phi_*X -> psi_*X
template <ParsummableCategory P>
typename P::Morphism bracket_gen(const P& c, const ApInjection& psi, const ApInjection& phi,
                                 const std::vector<typename P::Object>& xs) {
  if (psi.labels() != phi.labels()) throw Error("bracket_gen: index mismatch");
  if (xs.size() != phi.size()) throw Error("bracket_gen: family and injection differ in size");
  typename P::Morphism out = c.identity(c.zero());
  for (std::size_t k = 0; k < xs.size(); ++k) out = c.sum_mor(out, bracket(c, psi.rows()[k], phi.rows()[k], xs[k]));
  return out;
}

}  // namespace parsum
