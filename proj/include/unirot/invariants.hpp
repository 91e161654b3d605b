#pragma once

#include "unirot/lattice.hpp"

namespace unirot {

class UnimodularCycle;

// The discrete curvature mu(u, v, w) of a unimodular triple ((u,v) and
// (v,w) both bases): the unique integer a with
//
//   det2(u,v) * u + det2(v,w) * w + a * v = 0.
//
// Two independent evaluation routes are kept side by side and cross-check
// each other in the test suite:
//   - mu_via_product: the closed form det2(u,v) * det2(v,w) * det2(w,u);
//   - mu_via_equation: a componentwise solve of the defining equation with
//     a consistency check across both components.
// mu_local is the public entry point and uses the product route.

i64 mu_via_product(Vec2 u, Vec2 v, Vec2 w);
i64 mu_via_equation(Vec2 u, Vec2 v, Vec2 w);
i64 mu_local(Vec2 u, Vec2 v, Vec2 w);

/// Edge signs and curvature of a cyclic unimodular triple.
struct TripleInvariants {
  int alpha;  // det2(v, w)
  int beta;   // det2(w, u)
  int gamma;  // det2(u, v)
  i64 mu;     // alpha * beta * gamma

  friend bool operator==(TripleInvariants, TripleInvariants) = default;
};

/// Requires all three cyclically adjacent pairs of (u, v, w) to be bases.
TripleInvariants triple_invariants(Vec2 u, Vec2 v, Vec2 w);

/// Sum of local curvatures over all d cyclic windows of the cycle.
i64 mu_global(const UnimodularCycle& cycle);

/// Sum of the d cyclic edge signs; |result| <= d.
i64 nu_global(const UnimodularCycle& cycle);

}  // namespace unirot
