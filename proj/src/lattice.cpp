#include "unirot/lattice.hpp"

#include <array>
#include <cstdint>
#include <numeric>

namespace unirot {

std::string to_string(Vec2 u) {
  return "(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")";
}

int nu(Vec2 u, Vec2 v) {
  const i64 d = det2(u, v);
  if (d != 1 && d != -1)
    throw NotUnimodularError("pair " + to_string(u) + ", " + to_string(v) +
                                 " is not a lattice basis (det " + std::to_string(d) + ")",
                             d);
  return static_cast<int>(d);
}

namespace {

std::uint64_t magnitude(i64 v) {
  // Safe for INT64_MIN.
  return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

bool is_primitive(Vec2 u) {
  if (u.x == 0 && u.y == 0) throw ZeroVectorError("the zero vector is not primitive");
  return std::gcd(magnitude(u.x), magnitude(u.y)) == 1;
}

Vec2 complement(Vec2 a) {
  if (!is_primitive(a))
    throw ValidationError("complement requires a primitive vector, got " + to_string(a));
  constexpr i64 kMin = std::numeric_limits<i64>::min();
  if (a.x == kMin || a.y == kMin)
    throw OverflowError("coordinate magnitude too large for complement");

  // Extended gcd on |x|, |y|: p*|x| + q*|y| == 1.
  i64 old_r = a.x < 0 ? -a.x : a.x, r = a.y < 0 ? -a.y : a.y;
  i64 old_p = 1, p = 0;
  i64 old_q = 0, q = 1;
  while (r != 0) {
    const i64 quot = old_r / r;
    i64 t = old_r - quot * r;
    old_r = r;
    r = t;
    t = checked_sub(old_p, checked_mul(quot, p));
    old_p = p;
    p = t;
    t = checked_sub(old_q, checked_mul(quot, q));
    old_q = q;
    q = t;
  }
  // Restore signs: px*x + qy*y == 1 with the original coordinates.
  const i64 px = a.x < 0 ? checked_neg(old_p) : old_p;
  const i64 qy = a.y < 0 ? checked_neg(old_q) : old_q;
  // det2(a, c) = x*c.y - y*c.x = 1 with c = (-qy, px).
  const Vec2 c{checked_neg(qy), px};
  if (det2(a, c) != 1)
    throw InternalInconsistencyError("complement construction failed for " + to_string(a));
  return c;
}

Gl2::Gl2(i64 a, i64 b, i64 c, i64 d) : a_(a), b_(b), c_(c), d_(d), det_(0) {
  const i64 det = checked_sub(checked_mul(a, d), checked_mul(b, c));
  if (det != 1 && det != -1)
    throw NotUnimodularError("2x2 matrix determinant must be +-1, got " + std::to_string(det),
                             det);
  det_ = static_cast<int>(det);
}

Gl2 operator*(const Gl2& m, const Gl2& n) {
  return Gl2(checked_add(checked_mul(m.a_, n.a_), checked_mul(m.b_, n.c_)),
             checked_add(checked_mul(m.a_, n.b_), checked_mul(m.b_, n.d_)),
             checked_add(checked_mul(m.c_, n.a_), checked_mul(m.d_, n.c_)),
             checked_add(checked_mul(m.c_, n.b_), checked_mul(m.d_, n.d_)));
}

}  // namespace unirot
