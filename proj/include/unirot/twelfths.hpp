#pragma once

#include <string>

#include "unirot/checked.hpp"

namespace unirot {

/// Exact rotation arithmetic: an integer count of twelfths of a full turn.
/// Partial sums produced during cycle reduction are quarters (3 twelfths);
/// only totals of closed cycles must be whole turns.
struct Twelfths {
  i64 num = 0;  // numerator over the fixed denominator 12

  friend Twelfths operator+(Twelfths a, Twelfths b) { return {checked_add(a.num, b.num)}; }
  Twelfths& operator+=(Twelfths o) {
    num = checked_add(num, o.num);
    return *this;
  }
  friend bool operator==(Twelfths, Twelfths) = default;

  bool is_integral() const { return num % 12 == 0; }

  /// Whole turns; callers must have checked is_integral().
  i64 whole_turns() const {
    if (!is_integral())
      throw NonIntegerRotationError(std::to_string(num) + "/12 is not a whole number of turns");
    return num / 12;
  }
};

inline Twelfths twelfths_from_quarters(i64 quarters) { return {checked_mul(quarters, 3)}; }

inline std::string to_string(Twelfths t) { return std::to_string(t.num) + "/12"; }

}  // namespace unirot
