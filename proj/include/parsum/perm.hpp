#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "parsum/core.hpp"

namespace parsum {

// Permutation of {1..n} in one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::size_t> one_line);

  static Perm identity(std::size_t n);
  // The adjacent transposition (k k+1) in Sigma_n.
  static Perm adjacent(std::size_t n, std::size_t k);

  std::size_t size() const { return v_.size(); }
  std::size_t operator()(std::size_t i) const { return v_.at(i - 1); }
  const std::vector<std::size_t>& one_line() const { return v_; }
  Perm inverse() const;
  bool is_identity() const;

  std::string str() const;
  static Perm parse(std::string_view text);

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::size_t> v_;
};

// outer o inner
Perm compose(const Perm& outer, const Perm& inner);

// sigma_(n_1..n_k): moves block l to the slot sigma(l), keeping the order inside blocks.
Perm block_shuffle(const Perm& sigma, const std::vector<std::size_t>& sizes);
Perm block_sum_perm(const std::vector<Perm>& pis);
// sigma_(n) o (pi_1 x ... x pi_k)
Perm be_compose(const Perm& sigma, const std::vector<Perm>& pis);
// (pi_{sigma^-1(1)} x ... x pi_{sigma^-1(k)}) o sigma_(n)
Perm be_compose_shuffled(const Perm& sigma, const std::vector<Perm>& pis);

// Indices k_1..k_r of adjacent transpositions with sigma = s_{k_r} o ... o s_{k_1};
// the first entry is applied first.
std::vector<std::size_t> adjacent_factorization(const Perm& sigma);
Perm replay_factorization(std::size_t n, const std::vector<std::size_t>& word);

// The permutation ranking values: values[j] is v(i_{j+1}).
Perm sigma_tilde(const std::vector<Nat>& values);
// block_shuffle with sizes the indicator of positions inside {1..k}.
Perm sigma_hat(const Perm& sigma, const std::vector<std::size_t>& positions);

std::vector<Perm> all_perms(std::size_t n);

}  // namespace parsum
