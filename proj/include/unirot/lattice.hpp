#pragma once

#include <compare>
#include <string>

#include "unirot/checked.hpp"

namespace unirot {

/// A point of the integer lattice Z^2. Plain value type; all arithmetic on
/// coordinates is overflow-checked.
struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 u, Vec2 v) { return {checked_add(u.x, v.x), checked_add(u.y, v.y)}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {checked_sub(u.x, v.x), checked_sub(u.y, v.y)}; }
inline Vec2 operator-(Vec2 u) { return {checked_neg(u.x), checked_neg(u.y)}; }
inline Vec2 operator*(i64 k, Vec2 u) { return {checked_mul(k, u.x), checked_mul(k, u.y)}; }

std::string to_string(Vec2 u);  // "(x,y)"

/// det2(u, v) = u.x * v.y - u.y * v.x, exact.
inline i64 det2(Vec2 u, Vec2 v) {
  return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

/// Edge sign of a lattice basis {u, v}: det2(u, v), which must be +-1.
/// Throws NotUnimodularError otherwise.
int nu(Vec2 u, Vec2 v);

/// True iff gcd(|x|, |y|) == 1. Throws ZeroVectorError for the origin.
bool is_primitive(Vec2 u);

/// Canonical lattice complement of a primitive vector: the Bezout partner
/// c with det2(a, c) == 1, computed from the extended gcd of a's
/// coordinates. Deterministic.
Vec2 complement(Vec2 a);

/// Integer 2x2 matrix [[a, b], [c, d]] with determinant +-1, i.e. a lattice
/// automorphism. Validated on construction.
class Gl2 {
 public:
  Gl2(i64 a, i64 b, i64 c, i64 d);

  static Gl2 identity() { return Gl2(1, 0, 0, 1); }

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  i64 c() const { return c_; }
  i64 d() const { return d_; }
  int det() const { return det_; }

  friend Gl2 operator*(const Gl2& m, const Gl2& n);
  friend bool operator==(const Gl2&, const Gl2&) = default;

 private:
  i64 a_, b_, c_, d_;
  int det_;
};

/// Matrix-vector product, exact.
inline Vec2 apply(const Gl2& m, Vec2 u) {
  return {checked_add(checked_mul(m.a(), u.x), checked_mul(m.b(), u.y)),
          checked_add(checked_mul(m.c(), u.x), checked_mul(m.d(), u.y))};
}

}  // namespace unirot
