#include <doctest.h>

#include <limits>

#include "test_helpers.hpp"
#include "unirot/lattice.hpp"

using namespace unirot;
using testutil::random_vec;

TEST_CASE("det2 on simple pairs") {
  CHECK(det2({1, 0}, {0, 1}) == 1);
  CHECK(det2({0, 1}, {1, -1}) == -1);
  CHECK(det2({2, 4}, {1, 2}) == 0);
}

TEST_CASE("det2 is antisymmetric") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Vec2 u = random_vec(rng, 1 << 20);
    const Vec2 v = random_vec(rng, 1 << 20);
    CHECK(det2(u, v) == -det2(v, u));
  }
}

TEST_CASE("det2 overflow is surfaced") {
  const i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(det2({big, big}, {big, -1}), OverflowError);
}

TEST_CASE("nu on basis pairs") {
  CHECK(nu({1, 0}, {0, 1}) == 1);
  CHECK(nu({0, 1}, {-1, -1}) == 1);
  CHECK(nu({1, 0}, {2, 1}) == 1);
  CHECK_THROWS_AS(nu({1, 0}, {2, 0}), NotUnimodularError);
  try {
    nu({1, 0}, {3, 0});
  } catch (const NotUnimodularError& e) {
    CHECK(e.det() == 0);
  }
}

TEST_CASE("basis members are primitive") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const Vec2 x = testutil::random_primitive(rng);
    const Vec2 a = testutil::random_against(rng, x, rng.sign_coin());
    CHECK(is_primitive(x));
    CHECK(is_primitive(a));
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive({1, 0}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK(is_primitive({3, 5}));
  CHECK(is_primitive({0, -1}));
  CHECK_FALSE(is_primitive({0, -2}));
  CHECK_THROWS_AS(is_primitive({0, 0}), ZeroVectorError);
}

TEST_CASE("complement closes a basis deterministically") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const Vec2 a = testutil::random_primitive(rng);
    const Vec2 c = complement(a);
    CHECK(det2(a, c) == 1);
    CHECK(complement(a) == c);
  }
  CHECK_THROWS_AS(complement({2, 2}), ValidationError);
}

TEST_CASE("Gl2 validates its determinant") {
  CHECK(Gl2(1, 0, 0, 1).det() == 1);
  CHECK(Gl2(0, 1, 1, 0).det() == -1);
  CHECK_THROWS_AS(Gl2(1, 0, 0, 2), NotUnimodularError);
  CHECK_THROWS_AS(Gl2(1, 2, 2, 4), NotUnimodularError);
}

TEST_CASE("apply on simple transforms") {
  CHECK(apply(Gl2::identity(), {3, 7}) == Vec2{3, 7});
  CHECK(apply(Gl2(0, 1, 1, 0), {1, 0}) == Vec2{0, 1});
  // A shear along e1 fixes e1.
  CHECK(apply(Gl2(1, 1, 0, 1), {1, 0}) == Vec2{1, 0});
}

TEST_CASE("det2 is Gl2-equivariant") {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const Gl2 o = random_gl2(rng, 8);
    const Vec2 u = random_vec(rng, 1 << 10);
    const Vec2 v = random_vec(rng, 1 << 10);
    CHECK(det2(apply(o, u), apply(o, v)) == o.det() * det2(u, v));
  }
}

TEST_CASE("random_gl2 reaches both determinant signs") {
  Rng rng(15);
  bool plus = false, minus = false;
  for (int i = 0; i < 200 && !(plus && minus); ++i) {
    const int d = random_gl2(rng, 8).det();
    plus = plus || d == 1;
    minus = minus || d == -1;
  }
  CHECK(plus);
  CHECK(minus);
}
