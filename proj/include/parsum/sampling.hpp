#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parsum/instances.hpp"
#include "parsum/phi.hpp"
#include "parsum/random.hpp"
#include "parsum/sigma.hpp"

namespace parsum {

// Random generators of objects and morphisms, one specialization per category.
// Every sampler provides object(rng) and morphism_from(x, rng); samplers of
// parsummable categories also provide row(rng) for elements of the monoid.
template <class C>
struct Sampler;

namespace detail {

// A random composition of n into positive parts.
inline std::vector<std::size_t> composition(Rng& rng, std::size_t n) {
  std::vector<std::size_t> parts;
  while (n > 0) {
    auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Nat>(n)));
    parts.push_back(k);
    n -= k;
  }
  return parts;
}

}  // namespace detail

template <>
struct Sampler<SymCat> {
  SymCat cat;
  std::size_t max_object = 3;

  std::size_t object(Rng& rng) const { return static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(max_object))); }
  std::size_t nonunit_object(Rng& rng) const {
    return static_cast<std::size_t>(uniform(rng, 1, static_cast<Nat>(max_object)));
  }
  SymCat::Morphism morphism_from(std::size_t x, Rng& rng) const { return {random_perm(rng, x)}; }
  SymCat::Morphism automorphism(std::size_t x, Rng& rng) const { return morphism_from(x, rng); }
  std::vector<std::size_t> split(std::size_t w, Rng& rng) const { return detail::composition(rng, w); }
};

template <class S>
struct Sampler<MatCat<S>> {
  MatCat<S> cat;
  std::size_t max_object = 3;
  std::uint64_t max_entry = 2;

  std::size_t object(Rng& rng) const { return static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(max_object))); }
  std::size_t nonunit_object(Rng& rng) const {
    return static_cast<std::size_t>(uniform(rng, 1, static_cast<Nat>(max_object)));
  }
  typename MatCat<S>::Morphism morphism_from(std::size_t x, Rng& rng) const {
    auto rows = static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(max_object)));
    auto m = MatCat<S>::zeros(rows, x);
    for (auto& v : m.data) v = static_cast<typename S::value_type>(uniform(rng, 0, static_cast<Nat>(max_entry)));
    return m;
  }
  typename MatCat<S>::Morphism automorphism(std::size_t x, Rng& rng) const {
    return MatCat<S>::permutation_matrix(random_perm(rng, x));
  }
  std::vector<std::size_t> split(std::size_t w, Rng& rng) const { return detail::composition(rng, w); }
};

template <>
struct Sampler<FreePerm> {
  FreePerm cat;
  std::size_t max_length = 3;

  FreePerm::Object word(Rng& rng, std::size_t lo) const {
    auto n = static_cast<std::size_t>(uniform(rng, static_cast<Nat>(lo), static_cast<Nat>(max_length)));
    FreePerm::Object w;
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(static_cast<std::size_t>(uniform(rng, 1, static_cast<Nat>(cat.letters))));
    return w;
  }
  FreePerm::Object object(Rng& rng) const { return word(rng, 0); }
  FreePerm::Object nonunit_object(Rng& rng) const { return word(rng, 1); }

  FreePerm::Morphism morphism_from(const FreePerm::Object& w, Rng& rng) const {
    Perm p = random_perm(rng, w.size());
    FreePerm::Object dst(w.size());
    for (std::size_t i = 1; i <= w.size(); ++i) dst[p(i) - 1] = w[i - 1];
    return cat.make(w, dst, p);
  }

  // Letter-preserving shuffle of positions.
  FreePerm::Morphism automorphism(const FreePerm::Object& w, Rng& rng) const {
    std::map<std::size_t, std::vector<std::size_t>> by_letter;
    for (std::size_t i = 0; i < w.size(); ++i) by_letter[w[i]].push_back(i + 1);
    std::vector<std::size_t> image(w.size());
    for (const auto& [letter, pos] : by_letter) {
      Perm p = random_perm(rng, pos.size());
      for (std::size_t k = 0; k < pos.size(); ++k) image[pos[k] - 1] = pos[p(k + 1) - 1];
    }
    return cat.make(w, w, Perm(image));
  }

  std::vector<FreePerm::Object> split(const FreePerm::Object& w, Rng& rng) const {
    std::vector<FreePerm::Object> out;
    std::size_t at = 0;
    for (std::size_t k : detail::composition(rng, w.size())) {
      out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at + k));
      at += k;
    }
    return out;
  }
};

template <PermutativeCategory C>
struct Sampler<Phi<C>> {
  Phi<C> cat;
  Sampler<C> base;
  Nat max_position = 8;
  std::size_t max_support = 3;

  typename Phi<C>::Object object(Rng& rng) const {
    FinSet s = random_subset(rng, FinSet::range(1, max_position), max_support);
    std::map<Nat, typename C::Object> entries;
    for (Nat i : s) entries.emplace(i, base.nonunit_object(rng));
    return cat.make(entries);
  }

  // An object whose total tensor product is w.
  typename Phi<C>::Object object_with_total(const typename C::Object& w, Rng& rng) const {
    auto parts = base.split(w, rng);
    Nat room = std::max<Nat>(max_position, static_cast<Nat>(parts.size()));
    std::vector<Nat> slots = FinSet::range(1, room).elements();
    for (std::size_t i = slots.size(); i > 1; --i)
      std::swap(slots[i - 1], slots[static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(i) - 1))]);
    slots.resize(parts.size());
    FinSet positions(slots);
    std::map<Nat, typename C::Object> entries;
    for (std::size_t k = 0; k < parts.size(); ++k) entries.emplace(positions[k], parts[k]);
    return cat.make(entries);
  }

  typename Phi<C>::Morphism morphism_from(const typename Phi<C>::Object& x, Rng& rng) const {
    auto g = base.morphism_from(cat.total(x), rng);
    return cat.lift(x, object_with_total(cat.base().cod(g), rng), g);
  }

  typename Phi<C>::Morphism automorphism(const typename Phi<C>::Object& x, Rng& rng) const {
    return cat.lift(x, x, base.automorphism(cat.total(x), rng));
  }

  ApRow row(Rng& rng) const { return random_row(rng); }

  // The tuple y of length n with canonical_interleave(n)_* y = w.
  std::vector<typename Phi<C>::Object> pullback(std::size_t n, const typename Phi<C>::Object& w) const {
    if (n == 0) {
      if (!w.entries.empty()) throw Error("pullback of a nonzero object along the empty injection");
      return {};
    }
    std::vector<std::map<Nat, typename C::Object>> parts(n);
    auto m = static_cast<Nat>(n);
    for (const auto& [i, e] : w.entries) parts[static_cast<std::size_t>((i - 1) % m)].emplace((i - 1) / m + 1, e);
    std::vector<typename Phi<C>::Object> out;
    for (const auto& p : parts) out.push_back(cat.make(p));
    return out;
  }
};

template <class P>
struct Sampler<Sigma<P>> {
  Sigma<P> cat;
  Sampler<P> base;
  std::size_t max_length = 3;

  typename Sigma<P>::Object object(Rng& rng) const {
    typename Sigma<P>::Object x;
    auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(max_length)));
    for (std::size_t i = 0; i < n; ++i) x.push_back(base.object(rng));
    return x;
  }
  typename Sigma<P>::Object nonunit_object(Rng& rng) const {
    typename Sigma<P>::Object x = object(rng);
    if (x.empty()) x.push_back(base.object(rng));
    return x;
  }

  // Target tuple of length n whose realization is w; n >= 1 unless w is zero.
  typename Sigma<P>::Object tuple_realizing(const typename P::Object& w, Rng& rng) const {
    Nat lo = cat.base().support(w).empty() ? 0 : 1;
    auto n = static_cast<std::size_t>(uniform(rng, lo, static_cast<Nat>(max_length)));
    return base.pullback(n, w);
  }

  typename Sigma<P>::Morphism morphism_from(const typename Sigma<P>::Object& x, Rng& rng) const {
    auto g = base.morphism_from(cat.realize(x), rng);
    return cat.lift(x, tuple_realizing(cat.base().cod(g), rng), g);
  }

  typename Sigma<P>::Morphism automorphism(const typename Sigma<P>::Object& x, Rng& rng) const {
    return cat.lift(x, x, base.automorphism(cat.realize(x), rng));
  }

  std::vector<typename Sigma<P>::Object> split(const typename Sigma<P>::Object& w, Rng& rng) const {
    std::vector<typename Sigma<P>::Object> out;
    std::size_t at = 0;
    for (std::size_t k : detail::composition(rng, w.size())) {
      out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at + k));
      at += k;
    }
    return out;
  }
};

// Injections used where supports must stay small: short composites of shifts,
// odd-number slots and finite permutations of a few points.
inline ApRow small_row(Rng& rng) {
  auto elementary = [&rng]() {
    switch (uniform(rng, 0, 3)) {
      case 0:
        return ApRow::affine(1, uniform(rng, 0, 3));
      case 1:
        return ApRow::affine(2, -1);
      case 2: {
        Perm p = random_perm(rng, static_cast<std::size_t>(uniform(rng, 2, 6)));
        std::map<Nat, Nat> moves;
        for (std::size_t i = 1; i <= p.size(); ++i) moves[static_cast<Nat>(i)] = static_cast<Nat>(p(i));
        return ApRow::finite_permutation(moves);
      }
      default:
        return ApRow::identity();
    }
  };
  ApRow u = elementary();
  if (coin(rng)) u = compose(elementary(), u);
  return u;
}

}  // namespace parsum
