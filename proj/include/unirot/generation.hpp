#pragma once

#include <cstdint>
#include <vector>

#include "unirot/cycles.hpp"
#include "unirot/rng.hpp"

namespace unirot {

/// Curvature description of an open unimodular sequence of length n: the
/// leading basis (u1, u2), the n-1 edge signs and the n-2 window
/// curvatures. nus[0] always equals det2(u1, u2).
struct CurvatureData {
  Vec2 u1;
  Vec2 u2;
  std::vector<int> nus;
  std::vector<i64> mus;

  friend bool operator==(const CurvatureData&, const CurvatureData&) = default;
};

/// Rebuilds the unique open sequence with the prescribed curvature data by
/// the recurrence u_{k+1} = -nus[k] * (nus[k-1] * u_{k-1} + mus[k-1] * u_k).
/// Coordinates can grow geometrically with large curvatures; overflow is
/// surfaced, not hidden. The result is re-measured before returning, so
/// extract_curvature(reconstruct(data)) == data always holds.
UnimodularPath reconstruct(const CurvatureData& data);

/// Measures a sequence; left inverse of reconstruct.
CurvatureData extract_curvature(const UnimodularPath& path);

/// Inserts s*u_j + t*u_{j+1} (s, t in {-1,+1}) between positions j and
/// j+1. Always yields a valid cycle one longer.
UnimodularCycle insert_triangle_move(const UnimodularCycle& cycle, std::size_t j, int s, int t);

/// Inserts the pair (z, u_j) after position j, where z = s*u_j + t*c and c
/// is the canonical complement of u_j (t in {-1,+1}). The cycle gains an
/// immediate back-and-forth; curvature sums and winding are unchanged.
UnimodularCycle insert_backtrack_move(const UnimodularCycle& cycle, std::size_t j, i64 s, int t);

struct MoveWeights {
  unsigned insert_triangle = 6;
  unsigned insert_backtrack = 3;
  unsigned gl2_randomize = 1;
};

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t target_length = 3;
  i64 shear_bound = 4;       // cap on the backtrack insertion coefficient
  MoveWeights moves;
  bool fan = false;          // growth by (a+b) insertions from the positive triangle only
};

/// Random valid cycle of exactly target_length vectors, grown from a seed
/// triangle (or a basis pair for length 2) by weighted inverse reduction
/// moves, then conjugated by a random word in the standard generators.
/// Deterministic for a fixed seed. Moves that would leave the generator's
/// coordinate budget are re-rolled a bounded number of times, after which
/// OverflowError is reported.
UnimodularCycle random_cycle(const GeneratorParams& params);

/// Random word of length <= max_word_length in the generators
/// [[0,-1],[1,0]], [[1,1],[0,1]], [[1,-1],[0,1]] and [[1,0],[0,-1]];
/// covers both determinant signs.
Gl2 random_gl2(Rng& rng, std::size_t max_word_length);

/// Random open unimodular sequence, built directly edge by edge
/// (independent of reconstruct); used by round-trip suites.
UnimodularPath random_path(Rng& rng, std::size_t length, i64 shear_bound);

}  // namespace unirot
