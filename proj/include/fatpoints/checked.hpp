#pragma once

#include <cstdint>

#include "fatpoints/errors.hpp"

namespace fatpoints {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow");
  return r;
}

// C(n, 2) with the convention that it vanishes for n < 2.
inline Int choose2(Int n) { return n < 2 ? 0 : checked_mul(n, n - 1) / 2; }

// dim R_n for R = k[x, y, z]; zero for n < 0.
inline Int forms_of_degree(Int n) { return choose2(checked_add(n, 2)); }

}  // namespace fatpoints
