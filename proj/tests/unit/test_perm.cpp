#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "parsum/perm.hpp"
#include "parsum/random.hpp"

using namespace parsum;

namespace {

// Direct evaluation of the block shuffle formula: element m of block l goes to
// offset (sum of sizes of blocks placed before slot sigma(l)) + m.
std::vector<std::size_t> shuffle_oracle(const Perm& sigma, const std::vector<std::size_t>& sizes) {
  std::size_t k = sizes.size();
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= k; ++l) {
    std::size_t offset = 0;
    for (std::size_t l2 = 1; l2 <= k; ++l2)
      if (sigma(l2) < sigma(l)) offset += sizes[l2 - 1];
    for (std::size_t m = 1; m <= sizes[l - 1]; ++m) out.push_back(offset + m);
  }
  return out;
}

}  // namespace

TEST_CASE("block shuffle examples") {
  CHECK(block_shuffle(Perm({2, 1}), {1, 2}) == Perm({3, 1, 2}));
  CHECK(block_shuffle(Perm::identity(3), {2, 0, 1}) == Perm::identity(3));
  CHECK(block_shuffle(Perm({2, 1}), {0, 0}).size() == 0);
  CHECK_THROWS_AS(block_shuffle(Perm({2, 1}), {1}), Error);
  for (const Perm& s : all_perms(3))
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t c = 0; c <= 2; ++c)
          CHECK(block_shuffle(s, {a, b, c}).one_line() == shuffle_oracle(s, {a, b, c}));
}

TEST_CASE("structure map has two agreeing expressions") {
  CHECK(be_compose(Perm({2, 1}), {Perm::identity(1), Perm({2, 1})}) == Perm({3, 2, 1}));
  CHECK(be_compose_shuffled(Perm({2, 1}), {Perm::identity(1), Perm({2, 1})}) == Perm({3, 2, 1}));
  CHECK(be_compose(Perm::identity(1), {Perm({2, 3, 1})}) == Perm({2, 3, 1}));
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    auto k = static_cast<std::size_t>(uniform(rng, 0, 4));
    std::vector<Perm> pis;
    for (std::size_t i = 0; i < k; ++i) pis.push_back(random_perm(rng, static_cast<std::size_t>(uniform(rng, 0, 3))));
    Perm s = random_perm(rng, k);
    CHECK(be_compose(s, pis) == be_compose_shuffled(s, pis));
  }
}

TEST_CASE("adjacent factorization replays exhaustively") {
  CHECK(adjacent_factorization(Perm::identity(4)).empty());
  CHECK(adjacent_factorization(Perm({2, 1})) == std::vector<std::size_t>{1});
  CHECK(replay_factorization(3, adjacent_factorization(Perm({3, 1, 2}))) == Perm({3, 1, 2}));
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Perm& s : all_perms(n)) {
      auto word = adjacent_factorization(s);
      CHECK(word.size() <= n * (n - 1) / 2 + (n == 0 ? 0 : 0));
      CHECK(replay_factorization(n, word) == s);
    }
}

TEST_CASE("sorting permutation and its block shuffle form") {
  CHECK(sigma_tilde({5, 3}) == Perm({2, 1}));
  CHECK(sigma_tilde({1, 4, 9}) == Perm::identity(3));
  CHECK(sigma_tilde({}).size() == 0);
  CHECK_THROWS_AS(sigma_tilde({2, 2}), Error);
  Perm s({3, 1, 2});
  CHECK(sigma_hat(s, {1, 3}) == sigma_tilde({3, 2}));
  CHECK(sigma_hat(s, {1, 2, 3}) == s);
  for (std::size_t k = 0; k <= 5; ++k)
    for (const Perm& p : all_perms(k))
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> pos;
        std::vector<Nat> vals;
        for (std::size_t i = 1; i <= k; ++i)
          if (mask >> (i - 1) & 1U) {
            pos.push_back(i);
            vals.push_back(static_cast<Nat>(p(i)));
          }
        CHECK(sigma_hat(p, pos) == sigma_tilde(vals));
      }
}

TEST_CASE("perm algebra and text") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    Perm a = random_perm(rng, 5), b = random_perm(rng, 5);
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(compose(a, b)(3) == a(b(3)));
    CHECK(Perm::parse(a.str()) == a);
  }
  CHECK(Perm::parse("[]").size() == 0);
  CHECK_THROWS_AS(Perm::parse("[1,1]"), Error);
  CHECK(all_perms(4).size() == 24);
}
