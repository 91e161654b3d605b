#include "unirot/generation.hpp"

#include <algorithm>
#include <string>

#include "unirot/invariants.hpp"

namespace unirot {

namespace {

// Generator coordinate budget. Keeping every coordinate below 2^20 leaves
// ample headroom in checked 64-bit arithmetic for determinants, curvature
// products and their sums over cycles of any campaign length.
constexpr i64 kCoordBudget = i64{1} << 20;

bool within_budget(Vec2 v) {
  return v.x > -kCoordBudget && v.x < kCoordBudget && v.y > -kCoordBudget && v.y < kCoordBudget;
}

constexpr int kMaxMoveAttempts = 64;

}  // namespace

CurvatureData extract_curvature(const UnimodularPath& path) {
  CurvatureData data;
  data.u1 = path[0];
  data.u2 = path[1];
  const std::size_t n = path.size();
  data.nus.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) data.nus.push_back(nu(path[i], path[i + 1]));
  if (n >= 3) {
    data.mus.reserve(n - 2);
    for (std::size_t k = 1; k + 1 < n; ++k)
      data.mus.push_back(mu_local(path[k - 1], path[k], path[k + 1]));
  }
  return data;
}

UnimodularPath reconstruct(const CurvatureData& data) {
  if (data.nus.empty())
    throw BadCurvatureError("curvature data needs at least one edge sign");
  if (data.mus.size() + 1 != data.nus.size())
    throw BadCurvatureError("curvature data has " + std::to_string(data.nus.size()) +
                            " edge signs but " + std::to_string(data.mus.size()) +
                            " window curvatures; expected one fewer");
  for (const int s : data.nus)
    if (s != 1 && s != -1)
      throw BadCurvatureError("edge signs must be +-1, got " + std::to_string(s));
  const i64 first = det2(data.u1, data.u2);
  if (first != data.nus[0])
    throw BadCurvatureError("first edge sign " + std::to_string(data.nus[0]) +
                            " does not match det2(u1, u2) = " + std::to_string(first));

  std::vector<Vec2> vecs{data.u1, data.u2};
  const std::size_t n = data.nus.size() + 1;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const Vec2 t = data.nus[k - 1] * vecs[k - 1] + data.mus[k - 1] * vecs[k];
    vecs.push_back(static_cast<i64>(-data.nus[k]) * t);
  }
  UnimodularPath path = UnimodularPath::validate(std::move(vecs));
  if (!(extract_curvature(path) == data))
    throw InternalInconsistencyError("reconstructed sequence does not reproduce its curvature");
  return path;
}

UnimodularCycle insert_triangle_move(const UnimodularCycle& cycle, std::size_t j, int s, int t) {
  if (j >= cycle.size())
    throw ValidationError("insert position " + std::to_string(j) + " out of range");
  if ((s != 1 && s != -1) || (t != 1 && t != -1))
    throw ValidationError("triangle insertion coefficients must be +-1");
  const Vec2 a = cycle[j];
  const Vec2 b = cycle.cyclic(static_cast<std::ptrdiff_t>(j) + 1);
  const Vec2 inserted = static_cast<i64>(s) * a + static_cast<i64>(t) * b;
  std::vector<Vec2> out = cycle.vectors();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(j) + 1, inserted);
  return UnimodularCycle::validate(std::move(out));
}

UnimodularCycle insert_backtrack_move(const UnimodularCycle& cycle, std::size_t j, i64 s, int t) {
  if (j >= cycle.size())
    throw ValidationError("insert position " + std::to_string(j) + " out of range");
  if (t != 1 && t != -1) throw ValidationError("backtrack coefficient t must be +-1");
  const Vec2 a = cycle[j];
  const Vec2 z = s * a + static_cast<i64>(t) * complement(a);
  std::vector<Vec2> out = cycle.vectors();
  const auto at = out.begin() + static_cast<std::ptrdiff_t>(j) + 1;
  out.insert(at, {z, a});
  return UnimodularCycle::validate(std::move(out));
}

Gl2 random_gl2(Rng& rng, std::size_t max_word_length) {
  const Gl2 rot(0, -1, 1, 0);
  const Gl2 shear(1, 1, 0, 1);
  const Gl2 shear_inv(1, -1, 0, 1);
  const Gl2 flip(1, 0, 0, -1);
  Gl2 word = Gl2::identity();
  const std::size_t len = rng.index(max_word_length + 1);
  for (std::size_t i = 0; i < len; ++i) {
    switch (rng.index(4)) {
      case 0: word = word * rot; break;
      case 1: word = word * shear; break;
      case 2: word = word * shear_inv; break;
      default: word = word * flip; break;
    }
  }
  return word;
}

UnimodularPath random_path(Rng& rng, std::size_t length, i64 shear_bound) {
  if (length < 2) throw TooShortError("an open sequence needs at least 2 vectors");
  std::vector<Vec2> vecs;
  vecs.reserve(length);
  const Gl2 start = random_gl2(rng, 6);
  vecs.push_back(apply(start, Vec2{1, 0}));
  while (vecs.size() < length) {
    const Vec2 cur = vecs.back();
    const Vec2 next =
        rng.range(-shear_bound, shear_bound) * cur +
        static_cast<i64>(rng.sign_coin()) * complement(cur);
    vecs.push_back(next);
  }
  return UnimodularPath::validate(std::move(vecs));
}

namespace {

UnimodularCycle seed_triangle(bool reversed) {
  const std::vector<Vec2> tri{{1, 0}, {0, 1}, {-1, -1}};
  UnimodularCycle c = UnimodularCycle::validate(tri);
  return reversed ? c.reversed() : c;
}

bool all_within_budget(const UnimodularCycle& c) {
  return std::all_of(c.vectors().begin(), c.vectors().end(), within_budget);
}

// Applies one growth or randomization move; returns false when the result
// would leave the coordinate budget (the caller then re-rolls).
bool try_move(UnimodularCycle& work, Rng& rng, const GeneratorParams& params, bool allow_gl2) {
  const MoveWeights& w = params.moves;
  unsigned total = w.insert_triangle + w.insert_backtrack + w.gl2_randomize;
  if (total == 0) throw ValidationError("at least one move weight must be positive");
  unsigned pick = static_cast<unsigned>(rng.index(total));

  const std::size_t d = work.size();
  const bool backtrack_fits = d + 2 <= params.target_length;
  try {
    if (pick < w.insert_triangle || (!backtrack_fits && pick < w.insert_triangle + w.insert_backtrack)) {
      UnimodularCycle next =
          insert_triangle_move(work, rng.index(d), rng.sign_coin(), rng.sign_coin());
      if (!all_within_budget(next)) return false;
      work = std::move(next);
      return true;
    }
    if (pick < w.insert_triangle + w.insert_backtrack) {
      UnimodularCycle next = insert_backtrack_move(
          work, rng.index(d), rng.range(-params.shear_bound, params.shear_bound),
          rng.sign_coin());
      if (!all_within_budget(next)) return false;
      work = std::move(next);
      return true;
    }
    if (!allow_gl2) return true;  // randomization disabled late in growth; not a failure
    UnimodularCycle next = work.transformed(random_gl2(rng, 8));
    if (!all_within_budget(next)) return false;
    work = std::move(next);
    return true;
  } catch (const OverflowError&) {
    return false;
  }
}

}  // namespace

UnimodularCycle random_cycle(const GeneratorParams& params) {
  Rng rng(params.seed);
  if (params.fan) {
    if (params.target_length < 3)
      throw ValidationError("fan mode needs target length >= 3");
    UnimodularCycle work = seed_triangle(false);
    while (work.size() < params.target_length)
      work = insert_triangle_move(work, rng.index(work.size()), 1, 1);
    return work;
  }
  if (params.target_length < 2)
    throw ValidationError("target length must be at least 2");

  UnimodularCycle work = params.target_length == 2
                             ? UnimodularCycle::validate({{1, 0}, {0, 1}})
                             : seed_triangle(rng.coin());
  int stalled = 0;
  while (work.size() < params.target_length) {
    // Many consecutive non-growing iterations would mean the budget is
    // exhausted around every insertion point; report rather than spin.
    if (stalled > kMaxMoveAttempts)
      throw OverflowError("generator could not grow within its coordinate budget (seed " +
                          std::to_string(params.seed) + ")");
    const std::size_t before = work.size();
    try_move(work, rng, params, /*allow_gl2=*/stalled < kMaxMoveAttempts / 2);
    stalled = work.size() == before ? stalled + 1 : 0;
  }

  // Final whole-cycle randomization; shrink the word on budget misses.
  for (std::size_t word = 8;; --word) {
    try {
      UnimodularCycle next = work.transformed(random_gl2(rng, word));
      if (all_within_budget(next)) return next;
    } catch (const OverflowError&) {
    }
    if (word == 0) return work;
  }
}

}  // namespace unirot
