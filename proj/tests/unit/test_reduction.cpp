#include <doctest.h>

#include "test_helpers.hpp"
#include "unirot/cycles.hpp"
#include "unirot/generation.hpp"
#include "unirot/invariants.hpp"
#include "unirot/reduction.hpp"

using namespace unirot;

namespace {

const UnimodularCycle kTriangle = UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, -1}});
const UnimodularCycle kSquare =
    UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
const UnimodularCycle kPentagonFan =
    UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}});

void check_split_additive(const UnimodularCycle& whole, const UnimodularCycle& p1,
                          const UnimodularCycle& p2) {
  CHECK(mu_global(whole) == mu_global(p1) + mu_global(p2));
  CHECK(nu_global(whole) == nu_global(p1) + nu_global(p2));
  CHECK(decomposition_holds(whole, p1, p2));
}

}  // namespace

TEST_CASE("find_special_index returns the smallest qualifying window") {
  CHECK(find_special_index(kTriangle) == 0);  // all windows have curvature 1
  CHECK(find_special_index(kSquare) == 0);    // all windows have curvature 0
  GeneratorParams fan;
  fan.seed = 7;
  fan.target_length = 12;
  fan.fan = true;
  const UnimodularCycle f = random_cycle(fan);
  const std::size_t j = find_special_index(f);
  const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(j);
  const i64 m = mu_local(f.cyclic(sj - 1), f.cyclic(sj), f.cyclic(sj + 1));
  CHECK(m >= -1);
  CHECK(m <= 1);
  for (std::ptrdiff_t i = 0; i < sj; ++i) {
    const i64 earlier = mu_local(f.cyclic(i - 1), f.cyclic(i), f.cyclic(i + 1));
    CHECK((earlier < -1 || earlier > 1));
  }
}

TEST_CASE("prune_backtrack removes an immediate back-and-forth") {
  const auto zigzag = UnimodularCycle::validate({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  const UnimodularCycle pruned = prune_backtrack(zigzag, 1);
  CHECK(pruned == UnimodularCycle::validate({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(prune_backtrack(zigzag, 0), PatternMismatchError);
}

TEST_CASE("prune_backtrack inverts insert_backtrack_move") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    GeneratorParams params;
    params.seed = 4100 + static_cast<std::uint64_t>(i);
    params.target_length = 3 + rng.index(12);
    const UnimodularCycle base = random_cycle(params);
    const std::size_t j = rng.index(base.size());
    const UnimodularCycle widened =
        insert_backtrack_move(base, j, rng.range(-4, 4), rng.sign_coin());
    CHECK(widened.size() == base.size() + 2);
    CHECK(mu_global(widened) == mu_global(base));
    CHECK(nu_global(widened) == nu_global(base));
    CHECK(rot_winding_exact(widened) == rot_winding_exact(base));
    // The inserted pattern sits at positions j+1, j+2.
    CHECK(prune_backtrack(widened, j + 1) == base);
  }
}

TEST_CASE("split_triangle detaches the window and keeps sums additive") {
  // Window 2 of the pentagon fan has curvature -1.
  auto [rest, tri] = split_triangle(kPentagonFan, 2);
  CHECK(rest == kSquare);
  CHECK(tri == UnimodularCycle::validate({{0, 1}, {-1, 1}, {-1, 0}}));
  check_split_additive(kPentagonFan, rest, tri);

  // A window whose flanks are opposite has determinant 0.
  CHECK_THROWS_AS(split_triangle(kSquare, 1), PreconditionError);
}

TEST_CASE("split_triangle handles length-4 cycles") {
  const auto quad = UnimodularCycle::validate({{1, 0}, {1, 1}, {0, 1}, {-1, -1}});
  // Window 1 has curvature det(u0,u1) det(u1,u2) det(u2,u0) = -1.
  auto [rest, tri] = split_triangle(quad, 1);
  CHECK(rest == UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(tri == UnimodularCycle::validate({{1, 0}, {1, 1}, {0, 1}}));
  check_split_additive(quad, rest, tri);
}

TEST_CASE("split_quad detaches the special 4-cycle") {
  auto [rest, quad] = split_quad(kSquare, 1);
  CHECK(rest.size() == 2);
  CHECK(quad == kSquare);
  check_split_additive(kSquare, rest, quad);
  CHECK(nu_global(quad) == 4);

  // Hexagon with a quad window away from position 0.
  const auto hexagon = UnimodularCycle::validate(
      {{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}});
  auto [rest6, quad6] = split_quad(hexagon, 4);
  CHECK(rest6 == UnimodularCycle::validate({{1, 0}, {2, 1}, {1, 1}, {0, 1}}));
  CHECK(quad6 == UnimodularCycle::validate({{0, 1}, {-1, 0}, {0, -1}, {1, 0}}));
  check_split_additive(hexagon, rest6, quad6);

  // A back-and-forth window is not a quad window.
  const auto zigzag = UnimodularCycle::validate({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(split_quad(zigzag, 1), PreconditionError);
}

TEST_CASE("split_at_repeat recovers the two halves of a figure eight") {
  const auto eight = UnimodularCycle::validate(
      {{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {0, 1}, {1, -1}});
  auto [first, second] = split_at_repeat(eight, 0, 3);
  CHECK(first == UnimodularCycle::validate({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(second == UnimodularCycle::validate({{1, 0}, {0, 1}, {1, -1}}));
  check_split_additive(eight, first, second);

  CHECK_THROWS_AS(split_at_repeat(eight, 0, 2), NoRepeatError);
  CHECK_THROWS_AS(split_at_repeat(kTriangle, 0, 0), NoRepeatError);
}

TEST_CASE("split_at_repeat on a many-repeat cycle") {
  // In a valid cycle repeats are never cyclically adjacent (the pair would
  // have determinant 0), so both fragments always have length >= 2.
  const auto wide = UnimodularCycle::validate(
      {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(split_at_repeat(wide, 0, 5), NoRepeatError);  // different vectors
  auto [inner, outer] = split_at_repeat(wide, 1, 5);
  CHECK(inner.size() == 4);
  CHECK(outer.size() == 2);
  check_split_additive(wide, inner, outer);
}

TEST_CASE("triangle closed form matches the winding oracle on small triples") {
  const i64 B = 3;
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
              if (det2(v, w) != 1 && det2(v, w) != -1) continue;
              if (det2(w, u) != 1 && det2(w, u) != -1) continue;
              const auto tri = UnimodularCycle::validate({u, v, w});
              const Twelfths closed = triangle_rot_twelfths(u, v, w);
              CHECK(closed.is_integral());
              CHECK(closed.whole_turns() == rot_winding_exact(tri));
            }
        }
}

TEST_CASE("rot_by_reduction traces the reference cycles") {
  const ReductionResult tri = rot_by_reduction(kTriangle);
  CHECK(tri.rot == 1);
  REQUIRE(tri.trace.steps.size() == 1);
  CHECK(tri.trace.steps[0].kind == StepKind::BaseTriangle);

  const ReductionResult square = rot_by_reduction(kSquare);
  CHECK(square.rot == 1);
  REQUIRE(square.trace.steps.size() == 2);
  CHECK(square.trace.steps[0].kind == StepKind::SplitQuad);
  CHECK(square.trace.steps[1].kind == StepKind::BasePair);
  CHECK(square.trace.total == Twelfths{12});

  const auto pair = UnimodularCycle::validate({{1, 0}, {0, 1}});
  const ReductionResult two = rot_by_reduction(pair);
  CHECK(two.rot == 0);
  REQUIRE(two.trace.steps.size() == 1);
  CHECK(two.trace.steps[0].kind == StepKind::BasePair);
}

TEST_CASE("reduction agrees with the other methods and its trace replays") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    GeneratorParams params;
    params.seed = 4200 + static_cast<std::uint64_t>(i);
    params.target_length = 2 + rng.index(40);
    const UnimodularCycle cycle = random_cycle(params);
    const ReductionResult result = rot_by_reduction(cycle);
    CHECK(result.rot == rot_winding_exact(cycle));
    CHECK(result.rot == rot_formula(cycle));
    CHECK(result.trace.steps.size() <= cycle.size());
    replay_trace_checked(cycle, result.trace);
  }
}
