#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unirot/cycles.hpp"

namespace unirot {

enum class StepKind {
  PruneBacktrack,  // removed an immediate back-and-forth (a, x, a) -> (a)
  SplitTriangle,   // detached one vector as a length-3 cycle
  SplitQuad,       // detached a special length-4 cycle (a, x, -a, z)
  SplitAtRepeat,   // cut at a repeated vector into two shorter cycles
  BaseTriangle,    // length-3 base case, closed form
  BasePair,        // length-2 base case, rotation 0
};

const char* to_string(StepKind kind);

/// One reduction event. Carries enough to replay the step against the
/// cycle it was produced from: the window index acted on, the detached
/// piece, and the rotation it contributed (in twelfths).
struct ReductionStep {
  StepKind kind;
  std::size_t index = 0;
  std::size_t index2 = 0;  // second cut position, SplitAtRepeat only
  std::vector<Vec2> detached;
  Twelfths contribution;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Twelfths total;
};

/// Smallest window index j whose local curvature lies in {-1, 0, +1}.
/// Requires length >= 3. Such a window always exists for valid cycles;
/// LemmaViolatedError therefore signals a corrupted value or a bug.
std::size_t find_special_index(const UnimodularCycle& cycle);

/// Removes the back-and-forth pattern (..., a, x, a, ...) around window j
/// (requires cyclic(j+1) == cyclic(j-1) and length >= 4). Curvature sums,
/// edge cycle and winding number are unchanged.
UnimodularCycle prune_backtrack(const UnimodularCycle& cycle, std::size_t j);

/// Detaches the window triangle at j (requires length >= 4 and
/// det2(cyclic(j-1), cyclic(j+1)) == +-1). Returns {remainder, triangle};
/// mu, nu and the edge cycle are additive across the pair.
std::pair<UnimodularCycle, UnimodularCycle> split_triangle(const UnimodularCycle& cycle,
                                                           std::size_t j);

/// Detaches the special 4-cycle (u_{j-1}, u_j, u_{j+1}, u_{j+2}) when
/// cyclic(j+1) == -cyclic(j-1) (requires length >= 4). Returns
/// {remainder, quad} with the same additivity guarantees.
std::pair<UnimodularCycle, UnimodularCycle> split_quad(const UnimodularCycle& cycle,
                                                       std::size_t j);

/// Cuts the cycle at two positions holding the same vector. Returns the
/// fragment from i to j (keeping the shared vector once) and the
/// complementary fragment; both must have length >= 2.
std::pair<UnimodularCycle, UnimodularCycle> split_at_repeat(const UnimodularCycle& cycle,
                                                            std::size_t i, std::size_t j);

/// Rotation of a cyclic unimodular triple in twelfths:
/// 3 * (abc + a + b + c) for its edge signs a, b, c. Always a whole turn.
Twelfths triangle_rot_twelfths(Vec2 u, Vec2 v, Vec2 w);

struct ReductionResult {
  i64 rot;
  ReductionTrace trace;
};

/// Computes the rotation number by structural induction: repeatedly prune
/// backtracks, detach triangles and special quads at a window with local
/// curvature in {-1, 0, +1}, until a 2- or 3-cycle remains. Deterministic
/// (always the smallest qualifying window). The result equals the winding
/// number; the full trace of steps is returned alongside.
ReductionResult rot_by_reduction(const UnimodularCycle& cycle);

/// Replays a trace produced by rot_by_reduction against its input cycle,
/// checking at every split that mu and nu are additive and the edge cycles
/// decompose exactly, and that recorded contributions match the detached
/// pieces. Returns the number of steps checked. Throws
/// InternalInconsistencyError on the first violation.
std::size_t replay_trace_checked(const UnimodularCycle& cycle, const ReductionTrace& trace);

}  // namespace unirot
