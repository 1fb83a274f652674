#pragma once

#include <cstdint>
#include <numeric>

#include "sgforge/error.hpp"

namespace sgforge {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "addition overflows int64");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "subtraction overflows int64");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplication overflows int64");
  return r;
}

// Floor-style modulus, always in [0, m).
inline Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace sgforge
