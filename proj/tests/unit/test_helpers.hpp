#pragma once

#include <initializer_list>
#include <vector>

#include <doctest.h>

#include "unirot/generation.hpp"
#include "unirot/lattice.hpp"
#include "unirot/rng.hpp"

namespace testutil {

using unirot::i64;
using unirot::Vec2;

// Random vector with coordinates in [-bound, bound].
inline Vec2 random_vec(unirot::Rng& rng, i64 bound) {
  return {rng.range(-bound, bound), rng.range(-bound, bound)};
}

// Random a with det2(a, x) == eps for primitive x: a = k*x - eps*complement(x).
inline Vec2 random_against(unirot::Rng& rng, Vec2 x, int eps, i64 shear = 5) {
  return rng.range(-shear, shear) * x + static_cast<i64>(-eps) * unirot::complement(x);
}

// Random primitive vector (via a random lattice automorphism of e1).
inline Vec2 random_primitive(unirot::Rng& rng) {
  return apply(unirot::random_gl2(rng, 7), Vec2{1, 0});
}

// Independent brute-force solution of det(u,v)u + det(v,w)w + a*v = 0:
// scans candidate integers instead of dividing. Requires the leading and
// trailing pairs to be bases.
inline i64 mu_bruteforce(Vec2 u, Vec2 v, Vec2 w) {
  const i64 g = unirot::det2(u, v);
  const i64 h = unirot::det2(v, w);
  REQUIRE((g == 1 || g == -1));
  REQUIRE((h == 1 || h == -1));
  const Vec2 t = g * u + h * w;
  // |a| * max|v| <= max|t| componentwise, so this range always contains it.
  const i64 bound = (t.x < 0 ? -t.x : t.x) + (t.y < 0 ? -t.y : t.y) + 1;
  for (i64 a = -bound; a <= bound; ++a)
    if (t + a * v == Vec2{0, 0}) return a;
  FAIL("no integer solves the curvature equation");
  return 0;
}

inline std::vector<Vec2> vecs(std::initializer_list<Vec2> list) { return {list}; }

}  // namespace testutil
