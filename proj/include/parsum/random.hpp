#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "parsum/inj.hpp"
#include "parsum/perm.hpp"

namespace parsum {

using Rng = std::mt19937_64;

// Stable across platforms, unlike the standard distributions.
inline Nat uniform(Rng& rng, Nat lo, Nat hi) {
  return lo + static_cast<Nat>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
inline bool coin(Rng& rng) { return (rng() & 1U) != 0; }

// Seed for an independent stream, derived from a base seed and a name (FNV-1a).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

Perm random_perm(Rng& rng, std::size_t n);
FinSet random_subset(Rng& rng, const FinSet& pool, std::size_t max_size);

// A composite of a few elementary injections: shifts, affine maps, finite
// permutations, block rotations and interleave slots.
ApRow random_row(Rng& rng);
// A random injection over {1..k}.
ApInjection random_injection(Rng& rng, std::size_t k);
// Rows 2^(i-1)(2j-1) for i = 1..k.
ApInjection dyadic_injection(std::size_t k);
ApRow dyadic_row(Nat i);

}  // namespace parsum
