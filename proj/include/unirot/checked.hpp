#pragma once

#include <cstdint>
#include <limits>

#include "unirot/errors.hpp"

namespace unirot {

using i64 = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every coordinate computation in the
// library goes through these helpers, so a result that leaves the
// representable range raises OverflowError instead of silently wrapping.

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline i64 checked_neg(i64 a) {
  if (a == std::numeric_limits<i64>::min()) throw OverflowError("64-bit overflow in negation");
  return -a;
}

// Quotient a / b; the only unrepresentable case is INT64_MIN / -1.
inline i64 checked_div(i64 a, i64 b) {
  if (b == 0) throw InternalInconsistencyError("division by zero");
  if (a == std::numeric_limits<i64>::min() && b == -1)
    throw OverflowError("64-bit overflow in division");
  return a / b;
}

inline int sign(i64 a) { return (a > 0) - (a < 0); }

}  // namespace unirot
