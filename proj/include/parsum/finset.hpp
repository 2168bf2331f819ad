#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "parsum/core.hpp"

namespace parsum {

// Finite set of positive integers, kept sorted without duplicates.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Nat> xs) : FinSet(std::vector<Nat>(xs)) {}
  explicit FinSet(std::vector<Nat> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 1) throw Error("FinSet elements must be positive");
  }

  static FinSet range(Nat lo, Nat hi) {
    std::vector<Nat> xs;
    for (Nat i = lo; i <= hi; ++i) xs.push_back(i);
    return FinSet(std::move(xs));
  }

  const std::vector<Nat>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  Nat operator[](std::size_t i) const { return elems_[i]; }

  bool contains(Nat x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  // 0-based rank of x, which must be an element.
  std::size_t rank(Nat x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) throw Error("rank of a non-element");
    return static_cast<std::size_t>(it - elems_.begin());
  }

  bool intersects(const FinSet& other) const {
    auto a = elems_.begin(), b = other.elems_.begin();
    while (a != elems_.end() && b != other.elems_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  bool subset_of(const FinSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  FinSet unite(const FinSet& other) const {
    std::vector<Nat> out;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out));
    return FinSet(std::move(out));
  }

  FinSet minus(const FinSet& other) const {
    std::vector<Nat> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
    return FinSet(std::move(out));
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Nat> elems_;
};

}  // namespace parsum
