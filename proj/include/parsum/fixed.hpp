#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "parsum/inj.hpp"
#include "parsum/parsumcat.hpp"
#include "parsum/phi.hpp"

namespace parsum {

// A cyclic group of order q acting on omega through one bijective row.
// omega is cut into consecutive blocks; each block holds one d-cycle for every
// divisor d of q, largest first, so every subgroup occurs as a stabilizer in
// every block. For prime q a block is a q-cycle followed by one fixed point.
class CyclicEmbedding {
 public:
  explicit CyclicEmbedding(std::size_t q);

  std::size_t order() const { return q_; }
  Nat block_size() const { return block_; }
  const ApRow& generator() const { return g_; }
  // g^k for k >= 0
  ApRow power(std::size_t k) const;

  FinSet orbit(Nat n) const;
  bool closed(const FinSet& s) const;
  // Orbits of a closed set, ordered by their least elements.
  std::vector<FinSet> orbits(const FinSet& s) const;
  // A G-equivariant bijection between two orbits of the same size sending
  // g^k(from) to g^k(to); empty when the orbit sizes differ.
  std::optional<std::map<Nat, Nat>> equivariant_bijection(Nat from, Nat to) const;
  // First n orbits of size d, in increasing order of their least element.
  std::vector<FinSet> orbits_of_size(std::size_t d, std::size_t n) const;

 private:
  std::size_t q_;
  Nat block_;
  ApRow g_;
};

// Components of the graph on 0..n-1 with an edge i - j whenever
// connected(i, j) holds, i.e. path components of the zig-zag relation.
// Returned as lists of indices, each sorted, ordered by least index.
std::vector<std::vector<std::size_t>> path_components(std::size_t n,
                                                      const std::function<bool(std::size_t, std::size_t)>& connected);

template <PermutativeCategory D>
bool is_fixed_obj(const Phi<D>& phi, const CyclicEmbedding& g, const typename Phi<D>::Object& x) {
  return phi.act_obj(g.generator(), x) == x;
}

template <PermutativeCategory D>
bool is_fixed_mor(const Phi<D>& phi, const CyclicEmbedding& g, const typename Phi<D>::Morphism& f) {
  return act_mor(phi, g.generator(), f) == f;
}

// The object constantly X on S.
template <PermutativeCategory D>
typename Phi<D>::Object pi_obj(const Phi<D>& phi, const typename D::Object& x, const FinSet& s) {
  std::map<Nat, typename D::Object> entries;
  for (Nat i : s) entries.emplace(i, x);
  return phi.make(entries);
}

// Coherence isomorphism Pi(X, S) -> Pi(X, T) along a bijection alpha : S -> T.
template <PermutativeCategory D>
typename Phi<D>::Morphism pi_transport(const Phi<D>& phi, const typename D::Object& x, const FinSet& s,
                                       const std::map<Nat, Nat>& alpha) {
  std::vector<Nat> image;
  for (Nat i : s) image.push_back(alpha.at(i));
  FinSet t(image);
  auto f = coherence_iso_ordered<D>(
      phi.base(), s, t, [&alpha](Nat i) { return alpha.at(i); }, [&x](Nat) { return x; });
  return phi.lift(pi_obj(phi, x, s), pi_obj(phi, x, t), f);
}

template <PermutativeCategory D>
struct OrbitAssignment {
  typename D::Object object;
  FinSet orbit;
};

// Sum of Pi(X_k, S_k); the orbits must be pairwise disjoint.
template <PermutativeCategory D>
typename Phi<D>::Object a_G(const Phi<D>& phi, const std::vector<OrbitAssignment<D>>& parts) {
  typename Phi<D>::Object out = phi.zero();
  for (const auto& p : parts) out = phi.sum_obj(out, pi_obj(phi, p.object, p.orbit));
  return out;
}

// Pi(X1, S1) + Pi(X2, S2) -> Pi(X1 (x) X2, S1) for an equivariant bijection
// alpha : S2 -> S1. The copy of X1 at the k-th point of S1 goes to slot 2k+1,
// the copy of X2 at alpha^-1 of that point to slot 2k+2.
template <PermutativeCategory D>
typename Phi<D>::Morphism homomorphism_iso(const Phi<D>& phi, const typename D::Object& x1, const FinSet& s1,
                                           const typename D::Object& x2, const FinSet& s2,
                                           const std::map<Nat, Nat>& alpha) {
  if (s1.intersects(s2)) throw Error("homomorphism_iso: orbits overlap");
  const D& d = phi.base();
  std::vector<std::size_t> rank;
  std::vector<typename D::Object> family;
  for (Nat i : s1.unite(s2)) {
    if (s1.contains(i)) {
      rank.push_back(2 * s1.rank(i) + 1);
      family.push_back(x1);
    } else {
      rank.push_back(2 * s1.rank(alpha.at(i)) + 2);
      family.push_back(x2);
    }
  }
  auto f = coherence_iso_ordered(d, rank, family);
  auto src = phi.sum_obj(pi_obj(phi, x1, s1), pi_obj(phi, x2, s2));
  return phi.lift(src, pi_obj(phi, d.tensor_obj(x1, x2), s1), f);
}

// X = sum over the orbits S_i of supp X of Pi(X_{s_i}, S_i), s_i = min S_i.
template <PermutativeCategory D>
std::vector<OrbitAssignment<D>> decompose(const Phi<D>& phi, const CyclicEmbedding& g,
                                          const typename Phi<D>::Object& x) {
  FinSet s = phi.support(x);
  if (!g.closed(s)) throw Error("decompose: support is not closed under the group");
  std::vector<OrbitAssignment<D>> out;
  for (const FinSet& o : g.orbits(s)) out.push_back({x.entries.at(o[0]), o});
  return out;
}

}  // namespace parsum
