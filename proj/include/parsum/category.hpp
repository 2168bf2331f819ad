#pragma once

#include <concepts>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "parsum/finset.hpp"
#include "parsum/perm.hpp"

namespace parsum {

template <class C>
concept Category = requires(const C& c, const typename C::Object& x, const typename C::Morphism& f) {
  requires std::equality_comparable<typename C::Object>;
  requires std::equality_comparable<typename C::Morphism>;
  { c.dom(f) } -> std::convertible_to<typename C::Object>;
  { c.cod(f) } -> std::convertible_to<typename C::Object>;
  { c.identity(x) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.show(x) } -> std::convertible_to<std::string>;
  { c.show(f) } -> std::convertible_to<std::string>;
  { c.name() } -> std::convertible_to<std::string>;
};

// Strict monoidal, strictly unital, with a symmetry.
template <class C>
concept PermutativeCategory = Category<C> &&
    requires(const C& c, const typename C::Object& x, const typename C::Morphism& f) {
      { c.unit() } -> std::convertible_to<typename C::Object>;
      { c.tensor_obj(x, x) } -> std::convertible_to<typename C::Object>;
      { c.tensor_mor(f, f) } -> std::convertible_to<typename C::Morphism>;
      { c.braiding(x, x) } -> std::convertible_to<typename C::Morphism>;
    };

// Object and morphism maps between two categories. Which laws a particular
// functor satisfies (strict symmetric monoidal, sum preserving, parsummable
// morphism) is established by the corresponding checks in laws.hpp.
template <class Src, class Dst>
struct Functor {
  std::string name;
  std::function<typename Dst::Object(const typename Src::Object&)> obj;
  std::function<typename Dst::Morphism(const typename Src::Morphism&)> mor;
};

template <class Src, class Dst>
using StrictSymMonFunctor = Functor<Src, Dst>;

template <class A, class B, class C>
Functor<A, C> compose_functors(const Functor<B, C>& g, const Functor<A, B>& f) {
  return {g.name + "*" + f.name, [g, f](const typename A::Object& x) { return g.obj(f.obj(x)); },
          [g, f](const typename A::Morphism& m) { return g.mor(f.mor(m)); }};
}

template <class C>
Functor<C, C> identity_functor() {
  return {"id", [](const typename C::Object& x) { return x; }, [](const typename C::Morphism& m) { return m; }};
}

template <PermutativeCategory C>
typename C::Object tensor_many(const C& c, const std::vector<typename C::Object>& xs) {
  typename C::Object out = c.unit();
  for (const auto& x : xs) out = c.tensor_obj(out, x);
  return out;
}

template <PermutativeCategory C>
typename C::Morphism tensor_many_mor(const C& c, const std::vector<typename C::Morphism>& fs) {
  typename C::Morphism out = c.identity(c.unit());
  for (const auto& f : fs) out = c.tensor_mor(out, f);
  return out;
}

// The coherence isomorphism for a single adjacent transposition (k k+1) on xs.
template <PermutativeCategory C>
typename C::Morphism adjacent_swap(const C& c, std::size_t k, const std::vector<typename C::Object>& xs) {
  std::vector<typename C::Object> left(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k - 1));
  std::vector<typename C::Object> right(xs.begin() + static_cast<std::ptrdiff_t>(k + 1), xs.end());
  auto mid = c.braiding(xs[k - 1], xs[k]);
  return c.tensor_mor(c.tensor_mor(c.identity(tensor_many(c, left)), mid), c.identity(tensor_many(c, right)));
}

// Composite of adjacent swaps along a word (first entry applied first).
template <PermutativeCategory C>
typename C::Morphism coherence_iso_along(const C& c, const std::vector<std::size_t>& word,
                                         std::vector<typename C::Object> xs) {
  typename C::Morphism out = c.identity(tensor_many(c, xs));
  for (std::size_t k : word) {
    if (k < 1 || k >= xs.size()) throw Error("transposition index out of range");
    out = c.compose(adjacent_swap(c, k, xs), out);
    std::swap(xs[k - 1], xs[k]);
  }
  return out;
}

// The morphism tensor(xs) -> tensor(xs[sigma^-1(i)]) determined by sigma.
template <PermutativeCategory C>
typename C::Morphism coherence_iso(const C& c, const Perm& sigma, const std::vector<typename C::Object>& xs) {
  if (sigma.size() != xs.size()) throw Error("coherence_iso: permutation and family differ in length");
  return coherence_iso_along(c, adjacent_factorization(sigma), xs);
}

// Family listed in source order; rank[k] is the 1-based target position of the
// k-th source element. This is the coherence iso of the composite with the
// order-preserving identifications of source and target with {1..n}.
template <PermutativeCategory C>
typename C::Morphism coherence_iso_ordered(const C& c, const std::vector<std::size_t>& rank,
                                           const std::vector<typename C::Object>& xs) {
  return coherence_iso(c, Perm(rank), xs);
}

// sigma : source -> target given pointwise; both sets carry the order of omega.
template <PermutativeCategory C>
typename C::Morphism coherence_iso_ordered(const C& c, const FinSet& source, const FinSet& target,
                                           const std::function<Nat(Nat)>& sigma,
                                           const std::function<typename C::Object(Nat)>& family) {
  if (source.size() != target.size()) throw Error("coherence_iso_ordered: sets differ in size");
  std::vector<std::size_t> rank;
  std::vector<typename C::Object> xs;
  for (Nat a : source) {
    rank.push_back(target.rank(sigma(a)) + 1);
    xs.push_back(family(a));
  }
  return coherence_iso_ordered(c, rank, xs);
}

}  // namespace parsum
