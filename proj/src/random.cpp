#include "parsum/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parsum {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : name) mix(static_cast<unsigned char>(c));
  return h;
}

Perm random_perm(Rng& rng, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(i) - 1))]);
  return Perm(std::move(v));
}

FinSet random_subset(Rng& rng, const FinSet& pool, std::size_t max_size) {
  std::vector<Nat> xs = pool.elements();
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(i) - 1))]);
  auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(std::min(max_size, xs.size()))));
  xs.resize(k);
  return FinSet(std::move(xs));
}

namespace {

ApRow elementary_row(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return ApRow::identity();
    case 1:
      return ApRow::affine(1, uniform(rng, 0, 6));
    case 2: {
      Nat a = uniform(rng, 2, 3);
      return ApRow::affine(a, uniform(rng, 1 - a, 3));
    }
    case 3: {
      auto n = static_cast<std::size_t>(uniform(rng, 2, 7));
      Perm p = random_perm(rng, n);
      std::map<Nat, Nat> moves;
      for (std::size_t i = 1; i <= n; ++i) moves[static_cast<Nat>(i)] = static_cast<Nat>(p(i));
      return ApRow::finite_permutation(moves);
    }
    case 4: {
      Nat b = uniform(rng, 2, 4);
      return ApRow::tabulate(0, b, [b](Nat j) {
        Nat t = (j - 1) / b, pos = (j - 1) % b;
        return t * b + (pos + 1) % b + 1;
      });
    }
    default: {
      Nat k = uniform(rng, 2, 3);
      return ApRow::affine(k, uniform(rng, 1, k) - k);
    }
  }
}

}  // namespace

ApRow random_row(Rng& rng) {
  ApRow u = elementary_row(rng);
  auto extra = uniform(rng, 0, 2);
  for (Nat i = 0; i < extra; ++i) u = compose(elementary_row(rng), u);
  return u;
}

ApRow dyadic_row(Nat i) {
  if (i < 1 || i > 61) throw Error("dyadic row index out of range");
  Nat p = Nat{1} << (i - 1);
  return ApRow::affine(2 * p, -p);
}

ApInjection dyadic_injection(std::size_t k) {
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  for (std::size_t i = 1; i <= k; ++i) {
    labels.push_back(static_cast<Nat>(i));
    rows.push_back(dyadic_row(static_cast<Nat>(i)));
  }
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection random_injection(Rng& rng, std::size_t k) {
  ApInjection phi;
  switch (uniform(rng, 0, 2)) {
    case 0:
      phi = canonical_interleave(k);
      break;
    case 1: {
      std::vector<FinSet> shape;
      for (std::size_t i = 0; i < k; ++i) shape.push_back(random_subset(rng, FinSet::range(1, 4), 3));
      phi = monotone_for(shape);
      break;
    }
    default:
      phi = dyadic_injection(k);
      break;
  }
  if (coin(rng)) phi = compose_outer(random_row(rng), phi);
  if (coin(rng)) phi = precompose_inner(phi, random_row(rng));
  if (coin(rng) && k > 1) {
    Perm p = random_perm(rng, k);
    std::vector<std::pair<Nat, Nat>> sigma;
    for (std::size_t i = 1; i <= k; ++i) sigma.emplace_back(static_cast<Nat>(i), static_cast<Nat>(p(i)));
    phi = reindex(phi, sigma);
  }
  return phi;
}

}  // namespace parsum
