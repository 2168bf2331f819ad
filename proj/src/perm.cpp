#include "parsum/perm.hpp"

#include <algorithm>
#include <numeric>

namespace parsum {

Perm::Perm(std::vector<std::size_t> one_line) : v_(std::move(one_line)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (std::size_t x : v_) {
    if (x < 1 || x > v_.size() || seen[x]) throw Error("not a permutation: " + str());
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  return Perm(std::move(v));
}

Perm Perm::adjacent(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw Error("adjacent transposition out of range");
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  std::swap(v[k - 1], v[k]);
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> w(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) w[v_[i] - 1] = i + 1;
  return Perm(std::move(w));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != i + 1) return false;
  return true;
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "]";
}

Perm Perm::parse(std::string_view text) {
  std::vector<std::size_t> v;
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  ws();
  if (i >= text.size() || text[i] != '[') throw Error("permutation must start with '['");
  ++i;
  ws();
  if (i < text.size() && text[i] == ']') return Perm();
  while (true) {
    ws();
    std::size_t start = i, x = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') x = x * 10 + static_cast<std::size_t>(text[i++] - '0');
    if (start == i) throw Error("expected a number in permutation");
    v.push_back(x);
    ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') break;
    throw Error("malformed permutation");
  }
  return Perm(std::move(v));
}

Perm compose(const Perm& outer, const Perm& inner) {
  if (outer.size() != inner.size()) throw Error("composing permutations of different sizes");
  std::vector<std::size_t> v(inner.size());
  for (std::size_t i = 1; i <= inner.size(); ++i) v[i - 1] = outer(inner(i));
  return Perm(std::move(v));
}

Perm block_shuffle(const Perm& sigma, const std::vector<std::size_t>& sizes) {
  const std::size_t k = sigma.size();
  if (sizes.size() != k) throw Error("block_shuffle: one size per block required");
  Perm inv = sigma.inverse();
  // Target offset of block l is the total size of the blocks sent before it.
  std::vector<std::size_t> target_offset(k + 1, 0);
  for (std::size_t slot = 1; slot <= k; ++slot) {
    std::size_t l = inv(slot);
    if (slot < k) target_offset[inv(slot + 1)] = target_offset[l] + sizes[l - 1];
  }
  std::vector<std::size_t> v;
  for (std::size_t l = 1; l <= k; ++l)
    for (std::size_t m = 1; m <= sizes[l - 1]; ++m) v.push_back(target_offset[l] + m);
  return Perm(std::move(v));
}

Perm block_sum_perm(const std::vector<Perm>& pis) {
  std::vector<std::size_t> v;
  std::size_t offset = 0;
  for (const auto& p : pis) {
    for (std::size_t x : p.one_line()) v.push_back(offset + x);
    offset += p.size();
  }
  return Perm(std::move(v));
}

namespace {
std::vector<std::size_t> sizes_of(const std::vector<Perm>& pis) {
  std::vector<std::size_t> n;
  for (const auto& p : pis) n.push_back(p.size());
  return n;
}
}  // namespace

Perm be_compose(const Perm& sigma, const std::vector<Perm>& pis) {
  return compose(block_shuffle(sigma, sizes_of(pis)), block_sum_perm(pis));
}

Perm be_compose_shuffled(const Perm& sigma, const std::vector<Perm>& pis) {
  Perm inv = sigma.inverse();
  std::vector<Perm> permuted;
  for (std::size_t i = 1; i <= pis.size(); ++i) permuted.push_back(pis[inv(i) - 1]);
  return compose(block_sum_perm(permuted), block_shuffle(sigma, sizes_of(pis)));
}

std::vector<std::size_t> adjacent_factorization(const Perm& sigma) {
  // Peel off s_k on the left while some value k+1 sits before k.
  std::vector<std::size_t> v = sigma.one_line();
  std::vector<std::size_t> pos(v.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) pos[v[i]] = i;
  std::vector<std::size_t> peeled;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 1; k < v.size(); ++k) {
      if (pos[k] > pos[k + 1]) {
        std::swap(v[pos[k]], v[pos[k + 1]]);
        std::swap(pos[k], pos[k + 1]);
        peeled.push_back(k);
        moved = true;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Perm replay_factorization(std::size_t n, const std::vector<std::size_t>& word) {
  Perm p = Perm::identity(n);
  for (std::size_t k : word) p = compose(Perm::adjacent(n, k), p);
  return p;
}

Perm sigma_tilde(const std::vector<Nat>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 1; r < order.size(); ++r)
    if (values[order[r]] == values[order[r - 1]]) throw Error("sigma_tilde needs injective values");
  std::vector<std::size_t> v(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) v[order[r]] = r + 1;
  return Perm(std::move(v));
}

Perm sigma_hat(const Perm& sigma, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> sizes(sigma.size(), 0);
  for (std::size_t p : positions) {
    if (p < 1 || p > sigma.size()) throw Error("position outside the permuted range");
    sizes[p - 1] = 1;
  }
  return block_shuffle(sigma, sizes);
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace parsum
