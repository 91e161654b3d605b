#include <doctest.h>

#include "test_helpers.hpp"
#include "unirot/cycles.hpp"
#include "unirot/invariants.hpp"

using namespace unirot;
using testutil::mu_bruteforce;
using testutil::random_against;
using testutil::random_primitive;
using testutil::random_vec;

TEST_CASE("mu via the defining equation") {
  CHECK(mu_via_equation({1, 0}, {0, 1}, {-1, -1}) == 1);
  CHECK(mu_via_equation({1, 0}, {0, 1}, {1, -1}) == -1);
  CHECK(mu_via_equation({1, 0}, {0, 1}, {-1, 0}) == 0);
  CHECK_THROWS_AS(mu_via_equation({1, 0}, {2, 0}, {0, 1}), NotUnimodularError);
}

TEST_CASE("mu via the product form") {
  CHECK(mu_via_product({1, 0}, {0, 1}, {-1, -1}) == 1);
  CHECK(mu_via_product({1, 0}, {0, 1}, {1, -1}) == -1);
  CHECK(mu_via_product({1, 0}, {0, 1}, {1, 0}) == 0);
  CHECK_THROWS_AS(mu_via_product({1, 0}, {2, 0}, {0, 1}), NotUnimodularError);
}

TEST_CASE("the two mu routes and the brute-force oracle agree, exhaustively") {
  // All unimodular triples with coordinates in a small box.
  const i64 B = 4;
  for (i64 ux = -B; ux <= B; ++ux)
    for (i64 uy = -B; uy <= B; ++uy)
      for (i64 vx = -B; vx <= B; ++vx)
        for (i64 vy = -B; vy <= B; ++vy) {
          const Vec2 u{ux, uy}, v{vx, vy};
          const i64 g = det2(u, v);
          if (g != 1 && g != -1) continue;
          for (i64 wx = -B; wx <= B; ++wx)
            for (i64 wy = -B; wy <= B; ++wy) {
              const Vec2 w{wx, wy};
              const i64 h = det2(v, w);
              if (h != 1 && h != -1) continue;
              const i64 product = mu_via_product(u, v, w);
              CHECK(product == mu_via_equation(u, v, w));
              CHECK(product == mu_bruteforce(u, v, w));
            }
        }
}

TEST_CASE("the two mu routes agree on larger random triples") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = random_primitive(rng);
    const Vec2 u = random_against(rng, x, rng.sign_coin(), 1 << 12);
    const Vec2 w = random_against(rng, x, -rng.sign_coin(), 1 << 12);
    CHECK(mu_via_product(u, x, w) == mu_via_equation(u, x, w));
  }
}

TEST_CASE("three-vector identity holds for arbitrary integer vectors") {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 u = random_vec(rng, 1 << 15);
    const Vec2 v = random_vec(rng, 1 << 15);
    const Vec2 w = random_vec(rng, 1 << 15);
    CHECK(det2(u, v) * w + det2(v, w) * u + det2(w, u) * v == Vec2{0, 0});
  }
}

TEST_CASE("mu antisymmetry, negation and Gl2 equivariance") {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = random_primitive(rng);
    const Vec2 u = random_against(rng, x, rng.sign_coin());
    const Vec2 w = random_against(rng, x, -rng.sign_coin());
    const i64 m = mu_local(u, x, w);
    CHECK(mu_local(w, x, u) == -m);
    CHECK(mu_local(-u, -x, -w) == m);
    const Gl2 o = random_gl2(rng, 8);
    CHECK(mu_local(apply(o, u), apply(o, x), apply(o, w)) == o.det() * m);
  }
}

TEST_CASE("shear identities") {
  Rng rng(24);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = random_primitive(rng);
    const Vec2 a = random_against(rng, x, rng.sign_coin());
    const Vec2 b = random_against(rng, x, -rng.sign_coin());
    const i64 m = mu_local(a, x, b);
    CHECK(mu_local(a + x, x, b) == m - det2(x, b));
    CHECK(mu_local(a - x, x, b) == m + det2(x, b));
    CHECK(mu_local(a, x, b + x) == m - det2(a, x));
    CHECK(mu_local(a, x, b - x) == m + det2(a, x));
  }
}

TEST_CASE("exchange identity") {
  Rng rng(25);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = random_primitive(rng);
    const Vec2 a = random_against(rng, x, rng.sign_coin());
    const Vec2 b = random_against(rng, x, -rng.sign_coin());
    const Vec2 u = random_against(rng, x, rng.sign_coin());
    const Vec2 v = random_against(rng, x, -rng.sign_coin());
    CHECK(mu_local(a, x, b) + mu_local(u, x, v) == mu_local(a, x, v) + mu_local(u, x, b));
  }
}

TEST_CASE("Jacobi identity, both forms") {
  Rng rng(26);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = random_primitive(rng);
    const Vec2 a = random_against(rng, x, rng.sign_coin());
    const Vec2 b = random_against(rng, x, rng.sign_coin());
    const Vec2 c = random_against(rng, x, rng.sign_coin());
    CHECK(mu_local(a, x, b) + mu_local(b, x, c) + mu_local(c, x, a) == 0);
    CHECK(mu_local(a, x, b) == mu_local(a, x, c) + mu_local(c, x, b));
  }
}

TEST_CASE("triple invariants") {
  const TripleInvariants t = triple_invariants({1, 0}, {0, 1}, {-1, -1});
  CHECK(t == TripleInvariants{1, 1, 1, 1});
  const TripleInvariants s = triple_invariants({1, 0}, {0, 1}, {1, -1});
  CHECK(s == TripleInvariants{-1, 1, 1, -1});
  // Reversal flips the orientation of every pair.
  const TripleInvariants r = triple_invariants({-1, -1}, {0, 1}, {1, 0});
  CHECK(r.mu == -t.mu);
  CHECK_THROWS_AS(triple_invariants({1, 0}, {0, 1}, {5, -1}), NotUnimodularError);
}

TEST_CASE("global sums on known cycles") {
  const auto tri = UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(mu_global(tri) == 3);
  CHECK(nu_global(tri) == 3);

  const auto flat = UnimodularCycle::validate({{1, 0}, {0, 1}, {1, -1}});
  CHECK(mu_global(flat) == -3);
  CHECK(nu_global(flat) == 1);

  const auto square = UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(mu_global(square) == 0);
  CHECK(nu_global(square) == 4);
}

TEST_CASE("every length-2 cycle has zero invariants") {
  Rng rng(27);
  for (int i = 0; i < 200; ++i) {
    const Vec2 u = random_primitive(rng);
    const Vec2 v = random_against(rng, u, -rng.sign_coin());
    const auto pair = UnimodularCycle::validate({u, v});
    CHECK(mu_global(pair) == 0);
    CHECK(nu_global(pair) == 0);
  }
}
