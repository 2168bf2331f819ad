#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parsum/fault.hpp"
#include "parsum/parsumcat.hpp"

namespace parsum {

// Finitely supported sequences of objects of a permutative category. A
// morphism records its source and target and one morphism between the
// total tensor products.
template <PermutativeCategory C>
class Phi {
 public:
  using Base = C;
  using Entry = typename C::Object;

  struct Object {
    std::map<Nat, Entry> entries;  // never holds the unit
    friend bool operator==(const Object&, const Object&) = default;
  };

  struct Morphism {
    Object src;
    Object dst;
    typename C::Morphism f;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  Phi() = default;
  explicit Phi(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }
  std::string name() const { return "Phi(" + base_.name() + ")"; }

  Object make(const std::map<Nat, Entry>& entries) const {
    Object x;
    for (const auto& [i, e] : entries) {
      if (i < 1) throw Error("Phi positions must be positive");
      if (!(e == base_.unit())) x.entries.emplace(i, e);
    }
    return x;
  }

  std::vector<Entry> family(const Object& x) const {
    std::vector<Entry> out;
    for (const auto& [i, e] : x.entries) out.push_back(e);
    return out;
  }

  Entry total(const Object& x) const { return tensor_many(base_, family(x)); }

  Morphism lift(Object src, Object dst, typename C::Morphism f) const {
    if (!(base_.dom(f) == total(src)) || !(base_.cod(f) == total(dst)))
      throw Error(name() + ": underlying morphism does not match the recorded ends");
    return {std::move(src), std::move(dst), std::move(f)};
  }

  Object dom(const Morphism& f) const { return f.src; }
  Object cod(const Morphism& f) const { return f.dst; }
  Morphism identity(const Object& x) const { return {x, x, base_.identity(total(x))}; }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.dst == g.src)) throw Error(name() + ": composing " + show(g) + " after " + show(f));
    return {f.src, g.dst, base_.compose(g.f, f.f)};
  }

  FinSet support(const Object& x) const {
    std::vector<Nat> s;
    for (const auto& [i, e] : x.entries) s.push_back(i);
    return FinSet(std::move(s));
  }

  Object act_obj(const ApRow& u, const Object& x) const {
    Object y;
    for (const auto& [i, e] : x.entries) y.entries.emplace(u(i), e);
    return y;
  }

  // Coherence isomorphism of the sorting permutation of u on supp(X).
  Morphism u_circ(const ApRow& u, const Object& x) const {
    std::vector<Nat> values;
    for (const auto& [i, e] : x.entries) values.push_back(u(i));
    Perm sorting = fault_active(Fault::phi_u_circ) ? Perm::identity(values.size()) : sigma_tilde(values);
    return {x, act_obj(u, x), coherence_iso(base_, sorting, family(x))};
  }

  // u_*X -> X: entries of u_*X listed by position, sorted back by their origin.
  Morphism u_circ_inverse(const ApRow& u, const Object& x) const {
    Object y = act_obj(u, x);
    std::map<Nat, Nat> origin;
    for (const auto& [i, e] : x.entries) origin.emplace(u(i), i);
    std::vector<Nat> values;
    for (const auto& [v, i] : origin) values.push_back(i);
    Perm sorting = fault_active(Fault::phi_u_circ) ? Perm::identity(values.size()) : sigma_tilde(values);
    return {y, x, coherence_iso(base_, sorting, family(y))};
  }

  Object zero() const { return {}; }

  Object sum_obj(const Object& x, const Object& y) const {
    Object out = x;
    for (const auto& [i, e] : y.entries)
      if (!out.entries.emplace(i, e).second) throw Error(name() + ": sum of objects with overlapping supports");
    return out;
  }

  // Conjugates f (x) g by the coherence isomorphisms of the tautological
  // bijections between supp X u supp Y and supp X followed by supp Y.
  Morphism sum_mor(const Morphism& f, const Morphism& g) const {
    Object src = sum_obj(f.src, g.src);
    Object dst = sum_obj(f.dst, g.dst);
    auto core = base_.tensor_mor(f.f, g.f);
    if (fault_active(Fault::phi_sum_shuffle)) return {src, dst, core};

    FinSet fs = support(f.src), gs = support(g.src);
    std::vector<std::size_t> into;
    for (const auto& [i, e] : src.entries)
      into.push_back(fs.contains(i) ? fs.rank(i) + 1 : fs.size() + gs.rank(i) + 1);
    auto before = coherence_iso_ordered(base_, into, family(src));

    FinSet all = support(dst);
    std::vector<std::size_t> out_of;
    std::vector<Entry> split;
    for (const auto* part : {&f.dst, &g.dst})
      for (const auto& [i, e] : part->entries) {
        out_of.push_back(all.rank(i) + 1);
        split.push_back(e);
      }
    auto after = coherence_iso_ordered(base_, out_of, split);
    return {src, dst, base_.compose(after, base_.compose(core, before))};
  }

  std::string show(const Object& x) const {
    std::string s = "phi{";
    bool first = true;
    for (const auto& [i, e] : x.entries) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(i) + ":" + base_.show(e);
    }
    return s + "}";
  }

  std::string show(const Morphism& f) const { return "(" + show(f.src) + " -> " + show(f.dst) + "; " + base_.show(f.f) + ")"; }

 private:
  C base_;
};

template <PermutativeCategory C>
  requires requires(const C& c, const typename C::Object& x) { c.hom_nonempty(x, x); }
bool hom_nonempty(const Phi<C>& phi, const typename Phi<C>::Object& x, const typename Phi<C>::Object& y) {
  return phi.base().hom_nonempty(phi.total(x), phi.total(y));
}

// Entrywise extension of a strict symmetric monoidal functor; entries sent
// to the unit are dropped.
template <PermutativeCategory C, PermutativeCategory D>
ParSumMorphism<Phi<C>, Phi<D>> phi_functor(const Phi<D>& target, const Functor<C, D>& F) {
  auto obj = [target, F](const typename Phi<C>::Object& x) {
    std::map<Nat, typename D::Object> out;
    for (const auto& [i, e] : x.entries) out.emplace(i, F.obj(e));
    return target.make(out);
  };
  return {"Phi(" + F.name + ")", obj, [obj, F](const typename Phi<C>::Morphism& f) {
            return typename Phi<D>::Morphism{obj(f.src), obj(f.dst), F.mor(f.f)};
          }};
}

}  // namespace parsum
