#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace parsum {

using Nat = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Nat checked_add(Nat a, Nat b) {
  Nat r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in injection arithmetic");
  return r;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in injection arithmetic");
  return r;
}

inline Nat checked_lcm(Nat a, Nat b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace parsum
