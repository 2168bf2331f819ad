#include "parsum/fixed.hpp"

#include <boost/pending/disjoint_sets.hpp>

namespace parsum {

namespace {

std::vector<std::size_t> divisors_descending(std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t d = q; d >= 1; --d)
    if (q % d == 0) out.push_back(d);
  return out;
}

}  // namespace

CyclicEmbedding::CyclicEmbedding(std::size_t q) : q_(q), block_(0) {
  if (q < 1) throw Error("cyclic_embedding: order must be positive");
  // (start offset, length) of each cycle inside a block
  std::vector<std::pair<Nat, Nat>> cycles;
  for (std::size_t d : divisors_descending(q)) {
    cycles.emplace_back(block_, static_cast<Nat>(d));
    block_ += static_cast<Nat>(d);
  }
  Nat b = block_;
  g_ = ApRow::tabulate(0, b, [b, cycles](Nat j) {
    Nat k = (j - 1) / b, o = (j - 1) % b;
    for (const auto& [start, len] : cycles)
      if (o < start + len) return k * b + start + (o - start + 1) % len + 1;
    throw Error("cyclic_embedding: offset outside the block");
  });
}

ApRow CyclicEmbedding::power(std::size_t k) const {
  ApRow out;
  for (std::size_t i = 0; i < k; ++i) out = compose(g_, out);
  return out;
}

FinSet CyclicEmbedding::orbit(Nat n) const {
  std::vector<Nat> pts{n};
  for (Nat m = g_(n); m != n; m = g_(m)) pts.push_back(m);
  return FinSet(std::move(pts));
}

bool CyclicEmbedding::closed(const FinSet& s) const { return g_.image(s) == s; }

std::vector<FinSet> CyclicEmbedding::orbits(const FinSet& s) const {
  std::vector<FinSet> out;
  FinSet left = s;
  while (!left.empty()) {
    FinSet o = orbit(left[0]);
    if (!o.subset_of(left)) throw Error("orbits: set is not closed under the group");
    out.push_back(o);
    left = left.minus(o);
  }
  return out;
}

std::optional<std::map<Nat, Nat>> CyclicEmbedding::equivariant_bijection(Nat from, Nat to) const {
  if (orbit(from).size() != orbit(to).size()) return std::nullopt;
  std::map<Nat, Nat> alpha;
  Nat a = from, b = to;
  do {
    alpha.emplace(a, b);
    a = g_(a);
    b = g_(b);
  } while (a != from);
  return alpha;
}

std::vector<FinSet> CyclicEmbedding::orbits_of_size(std::size_t d, std::size_t n) const {
  std::vector<FinSet> out;
  for (Nat j = 1; out.size() < n; ++j) {
    FinSet o = orbit(j);
    if (o.size() == d && o[0] == j) out.push_back(o);
    if (j > block_ * static_cast<Nat>(n + 1)) throw Error("orbits_of_size: no orbit of that size");
  }
  return out;
}

std::vector<std::vector<std::size_t>> path_components(std::size_t n,
                                                      const std::function<bool(std::size_t, std::size_t)>& connected) {
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sets.find_set(i) != sets.find_set(j) && (connected(i, j) || connected(j, i))) sets.union_set(i, j);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = sets.find_set(i);
    if (by_root.find(r) == by_root.end()) order.push_back(r);
    by_root[r].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r : order) out.push_back(by_root[r]);
  return out;
}

}  // namespace parsum
