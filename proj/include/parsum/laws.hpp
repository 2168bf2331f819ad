#pragma once

#include <map>
#include <string>
#include <vector>

#include "parsum/category.hpp"
#include "parsum/parsumcat.hpp"
#include "parsum/random.hpp"
#include "parsum/report.hpp"

namespace parsum {

// Executable forms of the axioms. Each check draws its own cases from the
// sampler and returns one PropertyResult per law; nothing throws out.

namespace detail {

template <class Cat, class T>
bool same(Witness& w, const Cat& c, const std::string& lhs_name, const T& lhs, const std::string& rhs_name,
          const T& rhs) {
  if (lhs == rhs) return true;
  w.term(lhs_name, c.show(lhs));
  w.term(rhs_name, c.show(rhs));
  w.fail(lhs_name + " differs from " + rhs_name);
  return false;
}

inline bool same_set(Witness& w, const std::string& lhs_name, const FinSet& lhs, const std::string& rhs_name,
                     const FinSet& rhs) {
  if (lhs == rhs) return true;
  w.term(lhs_name, lhs.str());
  w.term(rhs_name, rhs.str());
  w.fail(lhs_name + " differs from " + rhs_name);
  return false;
}

inline Nat max_of(const FinSet& s) { return s.empty() ? 0 : s.elements().back(); }

// A shift moving everything past the given support.
inline ApRow shift_past(const FinSet& s) { return ApRow::affine(1, max_of(s)); }

// A bijection of omega fixing s pointwise and permuting a few points around it.
inline ApRow fixing_perm(Rng& rng, const FinSet& s) {
  FinSet pool = FinSet::range(1, max_of(s) + 3).minus(s);
  Perm p = random_perm(rng, pool.size());
  std::map<Nat, Nat> moves;
  for (std::size_t i = 0; i < pool.size(); ++i) moves[pool[i]] = pool[p(i + 1) - 1];
  return ApRow::finite_permutation(moves);
}

}  // namespace detail

// Category axioms plus the permutative ones: strict associativity and unit,
// functoriality of the tensor and the four braiding laws.
template <PermutativeCategory C, class S>
std::vector<PropertyResult> check_permutative(const C& c, const S& s, Rng& rng, std::size_t cases) {
  using detail::same;
  std::vector<PropertyResult> out;

  out.push_back(run_property("composition-unital", "id o f = f = f o id", cases, rng, [&](Rng& r, Witness& w) {
    auto f = s.morphism_from(s.object(r), r);
    w.term("f", c.show(f));
    return same(w, c, "id o f", c.compose(c.identity(c.cod(f)), f), "f", f) &&
           same(w, c, "f o id", c.compose(f, c.identity(c.dom(f))), "f", f);
  }));

  out.push_back(run_property("composition-associative", "h o (g o f) = (h o g) o f", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(c.cod(f), r);
                               auto h = s.morphism_from(c.cod(g), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               w.term("h", c.show(h));
                               return same(w, c, "h o (g o f)", c.compose(h, c.compose(g, f)), "(h o g) o f",
                                           c.compose(c.compose(h, g), f));
                             }));

  out.push_back(run_property("tensor-strict-on-objects", "(X (x) Y) (x) Z = X (x) (Y (x) Z), 1 (x) X = X = X (x) 1",
                             cases, rng, [&](Rng& r, Witness& w) {
                               auto x = s.object(r), y = s.object(r), z = s.object(r);
                               return same(w, c, "(XY)Z", c.tensor_obj(c.tensor_obj(x, y), z), "X(YZ)",
                                           c.tensor_obj(x, c.tensor_obj(y, z))) &&
                                      same(w, c, "1X", c.tensor_obj(c.unit(), x), "X", x) &&
                                      same(w, c, "X1", c.tensor_obj(x, c.unit()), "X", x);
                             }));

  out.push_back(run_property("tensor-strict-on-morphisms",
                             "(f (x) g) (x) h = f (x) (g (x) h), id_1 (x) f = f = f (x) id_1", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(s.object(r), r);
                               auto h = s.morphism_from(s.object(r), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               w.term("h", c.show(h));
                               auto one = c.identity(c.unit());
                               return same(w, c, "(fg)h", c.tensor_mor(c.tensor_mor(f, g), h), "f(gh)",
                                           c.tensor_mor(f, c.tensor_mor(g, h))) &&
                                      same(w, c, "id_1 f", c.tensor_mor(one, f), "f", f) &&
                                      same(w, c, "f id_1", c.tensor_mor(f, one), "f", f);
                             }));

  out.push_back(run_property("tensor-functorial", "(f' (x) g') o (f (x) g) = (f' o f) (x) (g' o g), id (x) id = id",
                             cases, rng, [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(s.object(r), r);
                               auto f2 = s.morphism_from(c.cod(f), r);
                               auto g2 = s.morphism_from(c.cod(g), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               w.term("f'", c.show(f2));
                               w.term("g'", c.show(g2));
                               auto x = c.dom(f), y = c.dom(g);
                               return same(w, c, "(f'g') o (fg)", c.compose(c.tensor_mor(f2, g2), c.tensor_mor(f, g)),
                                           "(f'f)(g'g)", c.tensor_mor(c.compose(f2, f), c.compose(g2, g))) &&
                                      same(w, c, "id (x) id", c.tensor_mor(c.identity(x), c.identity(y)), "id",
                                           c.identity(c.tensor_obj(x, y)));
                             }));

  out.push_back(run_property("braiding-natural", "tau_{Y,Y'} o (f (x) g) = (g (x) f) o tau_{X,X'}", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(s.object(r), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               auto lhs = c.compose(c.braiding(c.cod(f), c.cod(g)), c.tensor_mor(f, g));
                               auto rhs = c.compose(c.tensor_mor(g, f), c.braiding(c.dom(f), c.dom(g)));
                               return same(w, c, "tau o (f (x) g)", lhs, "(g (x) f) o tau", rhs);
                             }));

  out.push_back(run_property("braiding-unital", "tau_{1,X} = id_X = tau_{X,1}", cases, rng, [&](Rng& r, Witness& w) {
    auto x = s.object(r);
    return same(w, c, "tau_{1,X}", c.braiding(c.unit(), x), "id_X", c.identity(x)) &&
           same(w, c, "tau_{X,1}", c.braiding(x, c.unit()), "id_X", c.identity(x));
  }));

  out.push_back(run_property("braiding-self-inverse", "tau_{Y,X} o tau_{X,Y} = id", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r), y = s.object(r);
                               return same(w, c, "tau o tau", c.compose(c.braiding(y, x), c.braiding(x, y)), "id",
                                           c.identity(c.tensor_obj(x, y)));
                             }));

  out.push_back(run_property("braiding-associative", "tau_{X (x) Y, Z} = (tau_{X,Z} (x) id_Y) o (id_X (x) tau_{Y,Z})",
                             cases, rng, [&](Rng& r, Witness& w) {
                               auto x = s.object(r), y = s.object(r), z = s.object(r);
                               auto lhs = c.braiding(c.tensor_obj(x, y), z);
                               auto rhs = c.compose(c.tensor_mor(c.braiding(x, z), c.identity(y)),
                                                    c.tensor_mor(c.identity(x), c.braiding(y, z)));
                               return same(w, c, "tau_{XY,Z}", lhs, "(tau (x) id) o (id (x) tau)", rhs);
                             }));
  return out;
}

// Exact preservation of unit, tensor, braiding, identities and composition.
template <PermutativeCategory C, PermutativeCategory D, class S>
std::vector<PropertyResult> check_strict_functor(const Functor<C, D>& F, const C& c, const D& d, const S& s, Rng& rng,
                                                 std::size_t cases) {
  using detail::same;
  std::vector<PropertyResult> out;
  out.push_back(run_cases(F.name + ":unit", "F(1) = 1", 1, [&](std::size_t, Witness& w) {
    return same(w, d, "F(1)", F.obj(c.unit()), "1", d.unit());
  }));
  out.push_back(run_property(F.name + ":tensor", "F(X (x) Y) = FX (x) FY, F(f (x) g) = Ff (x) Fg", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(s.object(r), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               auto x = c.dom(f), y = c.dom(g);
                               return same(w, d, "F(XY)", F.obj(c.tensor_obj(x, y)), "FX FY",
                                           d.tensor_obj(F.obj(x), F.obj(y))) &&
                                      same(w, d, "F(f (x) g)", F.mor(c.tensor_mor(f, g)), "Ff (x) Fg",
                                           d.tensor_mor(F.mor(f), F.mor(g)));
                             }));
  out.push_back(run_property(F.name + ":braiding", "F(tau_{X,Y}) = tau_{FX,FY}", cases, rng, [&](Rng& r, Witness& w) {
    auto x = s.object(r), y = s.object(r);
    w.term("X", c.show(x));
    w.term("Y", c.show(y));
    return same(w, d, "F(tau)", F.mor(c.braiding(x, y)), "tau_F", d.braiding(F.obj(x), F.obj(y)));
  }));
  out.push_back(run_property(F.name + ":functor", "F(id) = id, F(g o f) = Fg o Ff", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(c.cod(f), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               return same(w, d, "F(id)", F.mor(c.identity(c.dom(f))), "id",
                                           d.identity(F.obj(c.dom(f)))) &&
                                      same(w, d, "F(g o f)", F.mor(c.compose(g, f)), "Fg o Ff",
                                           d.compose(F.mor(g), F.mor(f)));
                             }));
  return out;
}

struct ParsumCheckOptions {
  // Also compare an instance's own u_circ_inverse with the derived one. Only
  // sensible when supports stay at small positions.
  bool compare_generic_inverse = false;
};

// Action, structure-map and sum axioms of a parsummable category.
template <ParsummableCategory P, class S>
std::vector<PropertyResult> check_parsummable(const P& c, const S& s, Rng& rng, std::size_t cases,
                                              ParsumCheckOptions opts = {}) {
  using detail::same;
  using detail::same_set;
  std::vector<PropertyResult> out;

  // Y and g are moved off the support of X (resp. f) so sums are defined.
  auto disjoint_object = [&](const FinSet& avoid, Rng& r) {
    return c.act_obj(detail::shift_past(avoid), s.object(r));
  };
  auto disjoint_morphism = [&](const FinSet& avoid, Rng& r) {
    auto g = s.morphism_from(s.object(r), r);
    FinSet both = avoid.unite(c.support(c.dom(g))).unite(c.support(c.cod(g)));
    return act_mor(c, detail::shift_past(both), g);
  };
  auto ends = [&](const typename P::Morphism& f) { return c.support(c.dom(f)).unite(c.support(c.cod(f))); };

  out.push_back(run_property("category-laws", "id o f = f = f o id, h o (g o f) = (h o g) o f", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(c.cod(f), r);
                               auto h = s.morphism_from(c.cod(g), r);
                               w.term("f", c.show(f));
                               return same(w, c, "id o f", c.compose(c.identity(c.cod(f)), f), "f", f) &&
                                      same(w, c, "f o id", c.compose(f, c.identity(c.dom(f))), "f", f) &&
                                      same(w, c, "h(gf)", c.compose(h, c.compose(g, f)), "(hg)f",
                                           c.compose(c.compose(h, g), f));
                             }));

  out.push_back(run_property("action-monoid", "1_*X = X, (uv)_*X = u_*(v_*X)", cases, rng, [&](Rng& r, Witness& w) {
    auto x = s.object(r);
    ApRow u = s.row(r), v = s.row(r);
    w.term("X", c.show(x));
    w.term("u", u.str());
    w.term("v", v.str());
    return same(w, c, "1_*X", c.act_obj(ApRow::identity(), x), "X", x) &&
           same(w, c, "(uv)_*X", c.act_obj(compose(u, v), x), "u_*(v_*X)", c.act_obj(u, c.act_obj(v, x)));
  }));

  out.push_back(run_property("structure-map-cocycle", "(uv)o^X = uo^{v_*X} o vo^X, 1o^X = id", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               ApRow u = s.row(r), v = s.row(r);
                               w.term("X", c.show(x));
                               w.term("u", u.str());
                               w.term("v", v.str());
                               auto lhs = c.u_circ(compose(u, v), x);
                               auto rhs = c.compose(c.u_circ(u, c.act_obj(v, x)), c.u_circ(v, x));
                               return same(w, c, "(uv)o", lhs, "uo o vo", rhs) &&
                                      same(w, c, "1o", c.u_circ(ApRow::identity(), x), "id", c.identity(x)) &&
                                      same(w, c, "dom uo", c.dom(c.u_circ(u, x)), "X", x) &&
                                      same(w, c, "cod uo", c.cod(c.u_circ(u, x)), "u_*X", c.act_obj(u, x));
                             }));

  out.push_back(run_property("structure-map-inverse", "uo^X has two-sided inverse", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               ApRow u = s.row(r);
                               w.term("X", c.show(x));
                               w.term("u", u.str());
                               auto fwd = c.u_circ(u, x);
                               auto back = u_circ_inverse(c, u, x);
                               bool ok = same(w, c, "inv o uo", c.compose(back, fwd), "id", c.identity(x)) &&
                                         same(w, c, "uo o inv", c.compose(fwd, back), "id",
                                              c.identity(c.act_obj(u, x)));
                               if (ok && opts.compare_generic_inverse)
                                 ok = same(w, c, "inverse", back, "derived inverse", u_circ_inverse_generic(c, u, x));
                               return ok;
                             }));

  out.push_back(run_property("support-moves-with-action", "supp(u_*X) = u(supp X)", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               ApRow u = s.row(r);
                               w.term("X", c.show(x));
                               w.term("u", u.str());
                               return same_set(w, "supp(u_*X)", c.support(c.act_obj(u, x)), "u(supp X)",
                                               u.image(c.support(x)));
                             }));

  out.push_back(run_property("support-fixing-acts-trivially", "u fixes supp X => u_*X = X and uo^X = id", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               ApRow u = detail::fixing_perm(r, c.support(x));
                               w.term("X", c.show(x));
                               w.term("u", u.str());
                               return same(w, c, "u_*X", c.act_obj(u, x), "X", x) &&
                                      same(w, c, "uo^X", c.u_circ(u, x), "id", c.identity(x));
                             }));

  out.push_back(run_property("sum-unital", "supp 0 = {}, X + 0 = X = 0 + X, f + id_0 = f", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto x = c.dom(f);
                               auto z = c.identity(c.zero());
                               w.term("f", c.show(f));
                               return same_set(w, "supp 0", c.support(c.zero()), "{}", FinSet{}) &&
                                      same(w, c, "X+0", c.sum_obj(x, c.zero()), "X", x) &&
                                      same(w, c, "0+X", c.sum_obj(c.zero(), x), "X", x) &&
                                      same(w, c, "f+id_0", c.sum_mor(f, z), "f", f) &&
                                      same(w, c, "id_0+f", c.sum_mor(z, f), "f", f);
                             }));

  out.push_back(run_property("sum-commutative", "X + Y = Y + X, f + g = g + f", cases, rng, [&](Rng& r, Witness& w) {
    auto f = s.morphism_from(s.object(r), r);
    auto g = disjoint_morphism(ends(f), r);
    w.term("f", c.show(f));
    w.term("g", c.show(g));
    return same(w, c, "X+Y", c.sum_obj(c.dom(f), c.dom(g)), "Y+X", c.sum_obj(c.dom(g), c.dom(f))) &&
           same(w, c, "f+g", c.sum_mor(f, g), "g+f", c.sum_mor(g, f));
  }));

  out.push_back(run_property("sum-associative", "(X + Y) + Z = X + (Y + Z), likewise on morphisms", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = disjoint_morphism(ends(f), r);
                               auto h = disjoint_morphism(ends(f).unite(ends(g)), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               w.term("h", c.show(h));
                               auto x = c.dom(f), y = c.dom(g), z = c.dom(h);
                               return same(w, c, "(X+Y)+Z", c.sum_obj(c.sum_obj(x, y), z), "X+(Y+Z)",
                                           c.sum_obj(x, c.sum_obj(y, z))) &&
                                      same(w, c, "(f+g)+h", c.sum_mor(c.sum_mor(f, g), h), "f+(g+h)",
                                           c.sum_mor(f, c.sum_mor(g, h)));
                             }));

  out.push_back(run_property("sum-functorial", "(f' + g') o (f + g) = (f' o f) + (g' o g), id + id = id", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto f2 = s.morphism_from(c.cod(f), r);
                               FinSet used = ends(f).unite(ends(f2));
                               // g and g' are composable and both avoid the supports of f, f'.
                               auto g0 = s.morphism_from(s.object(r), r);
                               auto g20 = s.morphism_from(c.cod(g0), r);
                               ApRow k = detail::shift_past(used.unite(ends(g0)).unite(ends(g20)));
                               auto g = act_mor(c, k, g0), g2 = act_mor(c, k, g20);
                               w.term("f", c.show(f));
                               w.term("f'", c.show(f2));
                               w.term("g", c.show(g));
                               w.term("g'", c.show(g2));
                               auto x = c.dom(f), y = c.dom(g);
                               return same(w, c, "(f'+g')(f+g)", c.compose(c.sum_mor(f2, g2), c.sum_mor(f, g)),
                                           "f'f + g'g", c.sum_mor(c.compose(f2, f), c.compose(g2, g))) &&
                                      same(w, c, "id+id", c.sum_mor(c.identity(x), c.identity(y)), "id",
                                           c.identity(c.sum_obj(x, y)));
                             }));

  out.push_back(run_property("sum-equivariant", "u_*(X + Y) = u_*X + u_*Y, uo^{X+Y} = uo^X + uo^Y", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               auto y = disjoint_object(c.support(x), r);
                               ApRow u = s.row(r);
                               w.term("X", c.show(x));
                               w.term("Y", c.show(y));
                               w.term("u", u.str());
                               auto xy = c.sum_obj(x, y);
                               return same(w, c, "u_*(X+Y)", c.act_obj(u, xy), "u_*X+u_*Y",
                                           c.sum_obj(c.act_obj(u, x), c.act_obj(u, y))) &&
                                      same(w, c, "uo^{X+Y}", c.u_circ(u, xy), "uo^X+uo^Y",
                                           c.sum_mor(c.u_circ(u, x), c.u_circ(u, y)));
                             }));

  out.push_back(run_property("sum-rejects-overlap", "X + X is undefined when supp X is nonempty", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto x = s.object(r);
                               if (c.support(x).empty()) return true;
                               w.term("X", c.show(x));
                               try {
                                 (void)c.sum_obj(x, x);
                               } catch (const Error&) {
                                 return true;
                               }
                               w.fail("sum of overlapping objects was accepted");
                               return false;
                             }));
  return out;
}

struct ParsumMorphismOptions {
  // Sum-preserving functors only need to preserve zero, sums and disjointness;
  // parsummable morphisms are also equivariant.
  bool equivariant = true;
};

template <ParsummableCategory C, ParsummableCategory D, class S>
std::vector<PropertyResult> check_parsum_morphism(const Functor<C, D>& F, const C& c, const D& d, const S& s,
                                                  Rng& rng, std::size_t cases, ParsumMorphismOptions opts = {}) {
  using detail::same;
  std::vector<PropertyResult> out;
  auto disjoint_morphism = [&](const FinSet& avoid, Rng& r) {
    auto g = s.morphism_from(s.object(r), r);
    FinSet both = avoid.unite(c.support(c.dom(g))).unite(c.support(c.cod(g)));
    return act_mor(c, detail::shift_past(both), g);
  };
  auto ends = [&](const typename C::Morphism& f) { return c.support(c.dom(f)).unite(c.support(c.cod(f))); };

  out.push_back(run_property(F.name + ":functor", "F(id) = id, F(g o f) = Fg o Ff", cases, rng,
                             [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = s.morphism_from(c.cod(f), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               return same(w, d, "F(id)", F.mor(c.identity(c.dom(f))), "id",
                                           d.identity(F.obj(c.dom(f)))) &&
                                      same(w, d, "F(g o f)", F.mor(c.compose(g, f)), "Fg o Ff",
                                           d.compose(F.mor(g), F.mor(f))) &&
                                      same(w, d, "dom Ff", d.dom(F.mor(f)), "F dom f", F.obj(c.dom(f))) &&
                                      same(w, d, "cod Ff", d.cod(F.mor(f)), "F cod f", F.obj(c.cod(f)));
                             }));

  if (opts.equivariant) {
    out.push_back(run_property(F.name + ":equivariant", "F(u_*X) = u_*FX, F(uo^X) = uo^{FX}", cases, rng,
                               [&](Rng& r, Witness& w) {
                                 auto x = s.object(r);
                                 ApRow u = s.row(r);
                                 w.term("X", c.show(x));
                                 w.term("u", u.str());
                                 return same(w, d, "F(u_*X)", F.obj(c.act_obj(u, x)), "u_*FX",
                                             d.act_obj(u, F.obj(x))) &&
                                        same(w, d, "F(uo^X)", F.mor(c.u_circ(u, x)), "uo^{FX}",
                                             d.u_circ(u, F.obj(x)));
                               }));
  }

  out.push_back(run_cases(F.name + ":zero", "F(0) = 0", 1, [&](std::size_t, Witness& w) {
    return same(w, d, "F(0)", F.obj(c.zero()), "0", d.zero());
  }));

  out.push_back(run_property(F.name + ":sums", "supp X, supp Y disjoint => supp FX, supp FY disjoint, "
                                               "F(X + Y) = FX + FY, F(f + g) = Ff + Fg",
                             cases, rng, [&](Rng& r, Witness& w) {
                               auto f = s.morphism_from(s.object(r), r);
                               auto g = disjoint_morphism(ends(f), r);
                               w.term("f", c.show(f));
                               w.term("g", c.show(g));
                               auto x = c.dom(f), y = c.dom(g);
                               if (d.support(F.obj(x)).intersects(d.support(F.obj(y)))) {
                                 w.fail("images of disjointly supported objects overlap");
                                 return false;
                               }
                               return same(w, d, "F(X+Y)", F.obj(c.sum_obj(x, y)), "FX+FY",
                                           d.sum_obj(F.obj(x), F.obj(y))) &&
                                      same(w, d, "F(f+g)", F.mor(c.sum_mor(f, g)), "Ff+Fg",
                                           d.sum_mor(F.mor(f), F.mor(g)));
                             }));
  return out;
}

template <ParsummableCategory C, ParsummableCategory D, class S>
std::vector<PropertyResult> check_sum_preserving(const Functor<C, D>& F, const C& c, const D& d, const S& s, Rng& rng,
                                                 std::size_t cases) {
  return check_parsum_morphism(F, c, d, s, rng, cases, ParsumMorphismOptions{false});
}

// A witness that a functor is an equivalence at the sampled scale: hom-set
// inverses and essential-surjectivity isomorphisms, checked by composition.
template <class Src, class Dst>
struct EquivalenceWitness {
  std::function<typename Src::Morphism(const typename Src::Object&, const typename Src::Object&,
                                       const typename Dst::Morphism&)>
      hom_inverse;
  std::function<typename Src::Object(const typename Dst::Object&)> preimage;
  // iso F(preimage(Y)) -> Y and its inverse
  std::function<typename Dst::Morphism(const typename Dst::Object&)> iso;
  std::function<typename Dst::Morphism(const typename Dst::Object&)> iso_inverse;
};

// Hom round trips use morphisms between images; ss draws source morphisms, ds
// draws target objects and automorphisms.
template <class Src, class Dst, class SS, class DS>
std::vector<PropertyResult> check_equivalence(const Functor<Src, Dst>& F, const EquivalenceWitness<Src, Dst>& wit,
                                              const Src& c, const Dst& d, const SS& ss, const DS& ds, Rng& rng,
                                              std::size_t cases) {
  using detail::same;
  std::vector<PropertyResult> out;
  out.push_back(run_property(F.name + ":faithful", "F^-1(F f) = f", cases, rng, [&](Rng& r, Witness& w) {
    auto f = ss.morphism_from(ss.object(r), r);
    w.term("f", c.show(f));
    return same(w, c, "F^-1(Ff)", wit.hom_inverse(c.dom(f), c.cod(f), F.mor(f)), "f", f);
  }));
  out.push_back(run_property(F.name + ":full", "F(F^-1 h) = h for h : FX -> FY", cases, rng, [&](Rng& r, Witness& w) {
    auto f = ss.morphism_from(ss.object(r), r);
    auto x = c.dom(f), y = c.cod(f);
    // Precomposing with a random automorphism of FX leaves the image of F in general.
    auto h = d.compose(F.mor(f), ds.automorphism(F.obj(x), r));
    w.term("h", d.show(h));
    auto back = wit.hom_inverse(x, y, h);
    return same(w, c, "dom F^-1 h", c.dom(back), "X", x) && same(w, c, "cod F^-1 h", c.cod(back), "Y", y) &&
           same(w, d, "F(F^-1 h)", F.mor(back), "h", h);
  }));
  out.push_back(run_property(F.name + ":essentially-surjective", "F(preimage Y) ~ Y by an explicit isomorphism",
                             cases, rng, [&](Rng& r, Witness& w) {
                               auto y = ds.object(r);
                               w.term("Y", d.show(y));
                               auto fwd = wit.iso(y), back = wit.iso_inverse(y);
                               auto fy = F.obj(wit.preimage(y));
                               w.term("iso", d.show(fwd));
                               return same(w, d, "dom iso", d.dom(fwd), "F(preimage Y)", fy) &&
                                      same(w, d, "cod iso", d.cod(fwd), "Y", y) &&
                                      same(w, d, "inv o iso", d.compose(back, fwd), "id", d.identity(fy)) &&
                                      same(w, d, "iso o inv", d.compose(fwd, back), "id", d.identity(y));
                             }));
  return out;
}

// The generalized action and the generalized structure maps.

namespace detail {

template <class S>
auto sample_family(const S& s, std::size_t k, Rng& rng) {
  std::vector<decltype(s.object(rng))> xs;
  for (std::size_t i = 0; i < k; ++i) xs.push_back(s.object(rng));
  return xs;
}

// Labels of phi split at random into two parts, with the matching subfamilies.
template <class T>
struct Partition {
  FinSet first, second;
  std::vector<T> xs1, xs2;
};

template <class T>
Partition<T> random_partition(const ApInjection& phi, const std::vector<T>& xs, Rng& rng) {
  Partition<T> out;
  std::vector<Nat> a1, a2;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (coin(rng)) {
      a1.push_back(phi.labels()[k]);
      out.xs1.push_back(xs[k]);
    } else {
      a2.push_back(phi.labels()[k]);
      out.xs2.push_back(xs[k]);
    }
  }
  out.first = FinSet(a1);
  out.second = FinSet(a2);
  return out;
}

// A bijection sigma from fresh labels onto the labels of phi, as reindexing
// pairs (a', sigma(a')), and the pulled-back family sigma^* xs.
template <class T>
std::pair<std::vector<std::pair<Nat, Nat>>, std::vector<T>> random_reindexing(const ApInjection& phi,
                                                                              const std::vector<T>& xs, Rng& rng) {
  Perm p = random_perm(rng, phi.size());
  std::vector<std::pair<Nat, Nat>> sigma;
  std::vector<T> pulled;
  for (std::size_t k = 1; k <= phi.size(); ++k) {
    std::size_t target = p(k) - 1;
    sigma.emplace_back(static_cast<Nat>(10 * k + 1), phi.labels()[target]);
    pulled.push_back(xs[target]);
  }
  return {sigma, pulled};
}

inline std::string show_rows(const ApInjection& phi) { return phi.str(); }

}  // namespace detail

// law 1..4 of the generalized action.
template <ParsummableCategory P, class S>
PropertyResult check_generalized_action(int law, const P& c, const S& s, Rng& rng, std::size_t cases) {
  using detail::same;
  static const char* statements[] = {
      "",
      "u_*(phi_* X) = (u phi)_* X",
      "phi_*((u_* X_a)_a) = (phi o (id x u))_* X",
      "phi_* X = (phi|A1)_* X|A1 + (phi|A2)_* X|A2, on objects and morphisms",
      "phi_* X = (phi o (sigma x id))_* (sigma^* X)",
  };
  if (law < 1 || law > 4) throw Error("generalized action: no law " + std::to_string(law));
  return run_property("generalized-action-" + std::to_string(law), statements[law], cases, rng,
                      [&](Rng& r, Witness& w) {
                        auto k = static_cast<std::size_t>(uniform(r, 0, 3));
                        ApInjection phi = random_injection(r, k);
                        auto xs = detail::sample_family(s, k, r);
                        w.term("phi", phi.str());
                        for (std::size_t i = 0; i < k; ++i) w.term("X" + std::to_string(i + 1), c.show(xs[i]));
                        switch (law) {
                          case 1: {
                            ApRow u = s.row(r);
                            w.term("u", u.str());
                            return same(w, c, "u_*(phi_*X)", c.act_obj(u, phi_star(c, phi, xs)), "(u phi)_*X",
                                        phi_star(c, compose_outer(u, phi), xs));
                          }
                          case 2: {
                            ApRow u = s.row(r);
                            w.term("u", u.str());
                            std::vector<typename P::Object> moved;
                            for (const auto& x : xs) moved.push_back(c.act_obj(u, x));
                            return same(w, c, "phi_*(u_*X)", phi_star(c, phi, moved), "(phi(id x u))_*X",
                                        phi_star(c, precompose_inner(phi, u), xs));
                          }
                          case 3: {
                            auto part = detail::random_partition(phi, xs, r);
                            w.term("A1", part.first.str());
                            ApInjection p1 = restrict(phi, part.first), p2 = restrict(phi, part.second);
                            bool ok = same(w, c, "phi_*X", phi_star(c, phi, xs), "split sum",
                                           c.sum_obj(phi_star(c, p1, part.xs1), phi_star(c, p2, part.xs2)));
                            if (!ok) return false;
                            // the same on a family of morphisms
                            std::vector<typename P::Morphism> fs, fs1, fs2;
                            for (std::size_t i = 0; i < k; ++i) {
                              fs.push_back(s.morphism_from(xs[i], r));
                              (part.first.contains(phi.labels()[i]) ? fs1 : fs2).push_back(fs.back());
                            }
                            return same(w, c, "phi_*f", phi_star_mor(c, phi, fs), "split sum of morphisms",
                                        c.sum_mor(phi_star_mor(c, p1, fs1), phi_star_mor(c, p2, fs2)));
                          }
                          default: {
                            auto [sigma, pulled] = detail::random_reindexing(phi, xs, r);
                            ApInjection re = reindex(phi, sigma);
                            w.term("phi o (sigma x id)", re.str());
                            return same(w, c, "phi_*X", phi_star(c, phi, xs), "(phi sigma)_* sigma^*X",
                                        phi_star(c, re, pulled));
                          }
                        }
                      });
}

// law 1..6 of the generalized structure maps.
template <ParsummableCategory P, class S>
PropertyResult check_structure_maps(int law, const P& c, const S& s, Rng& rng, std::size_t cases) {
  using detail::same;
  static const char* statements[] = {
      "",
      "u_*[psi, phi]_X = [u psi, u phi]_X and [v, u]_{phi_* X} = [v phi, u phi]_X",
      "[psi, phi]_{(u_* X_a)} = [psi o (id x u), phi o (id x u)]_X",
      "[psi, phi]_X = [psi|A1, phi|A1]_{X|A1} + [psi|A2, phi|A2]_{X|A2}",
      "[psi, phi]_X = [psi o (sigma x id), phi o (sigma x id)]_{sigma^* X}",
      "[phi, phi]_X = id",
      "[theta, psi]_X o [psi, phi]_X = [theta, phi]_X",
  };
  if (law < 1 || law > 6) throw Error("generalized structure maps: no law " + std::to_string(law));
  return run_property("structure-maps-" + std::to_string(law), statements[law], cases, rng, [&](Rng& r, Witness& w) {
    auto k = static_cast<std::size_t>(uniform(r, 0, 3));
    ApInjection phi = random_injection(r, k), psi = random_injection(r, k);
    auto xs = detail::sample_family(s, k, r);
    w.term("phi", phi.str());
    w.term("psi", psi.str());
    for (std::size_t i = 0; i < k; ++i) w.term("X" + std::to_string(i + 1), c.show(xs[i]));
    switch (law) {
      case 1: {
        ApRow u = s.row(r), v = s.row(r);
        w.term("u", u.str());
        w.term("v", v.str());
        auto b = bracket_gen(c, psi, phi, xs);
        return same(w, c, "u_*[psi,phi]", act_mor(c, u, b), "[u psi, u phi]",
                    bracket_gen(c, compose_outer(u, psi), compose_outer(u, phi), xs)) &&
               same(w, c, "[v,u]_{phi_*X}", bracket(c, v, u, phi_star(c, phi, xs)), "[v phi, u phi]",
                    bracket_gen(c, compose_outer(v, phi), compose_outer(u, phi), xs));
      }
      case 2: {
        ApRow u = s.row(r);
        w.term("u", u.str());
        std::vector<typename P::Object> moved;
        for (const auto& x : xs) moved.push_back(c.act_obj(u, x));
        return same(w, c, "[psi,phi]_{u_*X}", bracket_gen(c, psi, phi, moved), "[psi(id x u), phi(id x u)]",
                    bracket_gen(c, precompose_inner(psi, u), precompose_inner(phi, u), xs));
      }
      case 3: {
        auto part = detail::random_partition(phi, xs, r);
        w.term("A1", part.first.str());
        auto lhs = bracket_gen(c, psi, phi, xs);
        auto rhs = c.sum_mor(bracket_gen(c, restrict(psi, part.first), restrict(phi, part.first), part.xs1),
                             bracket_gen(c, restrict(psi, part.second), restrict(phi, part.second), part.xs2));
        return same(w, c, "[psi,phi]", lhs, "split sum", rhs);
      }
      case 4: {
        auto [sigma, pulled] = detail::random_reindexing(phi, xs, r);
        return same(w, c, "[psi,phi]_X", bracket_gen(c, psi, phi, xs), "reindexed",
                    bracket_gen(c, reindex(psi, sigma), reindex(phi, sigma), pulled));
      }
      case 5:
        return same(w, c, "[phi,phi]", bracket_gen(c, phi, phi, xs), "id", c.identity(phi_star(c, phi, xs)));
      default: {
        ApInjection theta = random_injection(r, k);
        w.term("theta", theta.str());
        return same(w, c, "[theta,psi][psi,phi]", c.compose(bracket_gen(c, theta, psi, xs), bracket_gen(c, psi, phi, xs)),
                    "[theta,phi]", bracket_gen(c, theta, phi, xs));
      }
    }
  });
}

// Brackets only depend on the injections through their values on the support.
template <ParsummableCategory P, class S>
PropertyResult check_support_change(const P& c, const S& s, Rng& rng, std::size_t cases) {
  using detail::same;
  return run_property("support-change", "u = u', v = v' on supp X => [v', u']_X = [v, u]_X", cases, rng,
                      [&](Rng& r, Witness& w) {
                        auto x = s.object(r);
                        FinSet supp = c.support(x);
                        ApRow u = s.row(r), v = s.row(r);
                        ApRow u2 = compose(u, detail::fixing_perm(r, supp));
                        ApRow v2 = compose(v, detail::fixing_perm(r, supp));
                        w.term("X", c.show(x));
                        w.term("u", u.str());
                        w.term("u'", u2.str());
                        w.term("v", v.str());
                        w.term("v'", v2.str());
                        return same(w, c, "[v',u']", bracket(c, v2, u2, x), "[v,u]", bracket(c, v, u, x));
                      });
}

// Parsummable morphisms commute with the generalized structure maps.
template <ParsummableCategory C, ParsummableCategory D, class S>
PropertyResult check_universal_naturality(const Functor<C, D>& F, const C& c, const D& d, const S& s, Rng& rng,
                                          std::size_t cases) {
  using detail::same;
  return run_property(F.name + ":brackets", "F([psi, phi]_X) = [psi, phi]_{FX}", cases, rng,
                      [&](Rng& r, Witness& w) {
                        auto k = static_cast<std::size_t>(uniform(r, 0, 3));
                        ApInjection phi = random_injection(r, k), psi = random_injection(r, k);
                        auto xs = detail::sample_family(s, k, r);
                        w.term("phi", phi.str());
                        w.term("psi", psi.str());
                        std::vector<typename D::Object> fxs;
                        for (std::size_t i = 0; i < k; ++i) {
                          w.term("X" + std::to_string(i + 1), c.show(xs[i]));
                          fxs.push_back(F.obj(xs[i]));
                        }
                        return same(w, d, "F[psi,phi]", F.mor(bracket_gen(c, psi, phi, xs)), "[psi,phi]_F",
                                    bracket_gen(d, psi, phi, fxs));
                      });
}

}  // namespace parsum
