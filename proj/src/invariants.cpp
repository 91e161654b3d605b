#include "unirot/invariants.hpp"

#include "unirot/cycles.hpp"

namespace unirot {

namespace {

i64 require_unit_det(Vec2 a, Vec2 b, const char* which) {
  const i64 d = det2(a, b);
  if (d != 1 && d != -1)
    throw NotUnimodularError(std::string(which) + " pair " + to_string(a) + ", " + to_string(b) +
                                 " is not a basis (det " + std::to_string(d) + ")",
                             d);
  return d;
}

}  // namespace

i64 mu_via_product(Vec2 u, Vec2 v, Vec2 w) {
  const i64 g = require_unit_det(u, v, "leading");
  const i64 h = require_unit_det(v, w, "trailing");
  return checked_mul(checked_mul(g, h), det2(w, u));
}

i64 mu_via_equation(Vec2 u, Vec2 v, Vec2 w) {
  const i64 g = require_unit_det(u, v, "leading");
  const i64 h = require_unit_det(v, w, "trailing");
  // Solve a * v = -(g*u + h*w) componentwise; both components must agree.
  const Vec2 t = -(g * u + h * w);
  bool have = false;
  i64 a = 0;
  if (v.x != 0) {
    if (t.x % v.x != 0)
      throw InternalInconsistencyError("curvature equation has no integer solution in x");
    a = t.x / v.x;
    have = true;
  } else if (t.x != 0) {
    throw InternalInconsistencyError("curvature equation unsolvable: v.x = 0 but rhs.x != 0");
  }
  if (v.y != 0) {
    if (t.y % v.y != 0)
      throw InternalInconsistencyError("curvature equation has no integer solution in y");
    const i64 ay = t.y / v.y;
    if (have && ay != a)
      throw InternalInconsistencyError("curvature equation components disagree");
    a = ay;
    have = true;
  } else if (t.y != 0) {
    throw InternalInconsistencyError("curvature equation unsolvable: v.y = 0 but rhs.y != 0");
  }
  if (!have) throw InternalInconsistencyError("middle vector of a basis cannot be zero");
  return a;
}

i64 mu_local(Vec2 u, Vec2 v, Vec2 w) { return mu_via_product(u, v, w); }

TripleInvariants triple_invariants(Vec2 u, Vec2 v, Vec2 w) {
  const i64 gamma = det2(u, v);
  const i64 alpha = det2(v, w);
  const i64 beta = det2(w, u);
  for (const i64 d : {gamma, alpha, beta})
    if (d != 1 && d != -1)
      throw NotUnimodularError("triple " + to_string(u) + ", " + to_string(v) + ", " +
                                   to_string(w) + " is not cyclically unimodular (det " +
                                   std::to_string(d) + ")",
                               d);
  return {static_cast<int>(alpha), static_cast<int>(beta), static_cast<int>(gamma),
          alpha * beta * gamma};
}

i64 mu_global(const UnimodularCycle& cycle) {
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(cycle.size());
  i64 total = 0;
  for (std::ptrdiff_t i = 0; i < d; ++i)
    total = checked_add(total, mu_local(cycle.cyclic(i - 1), cycle.cyclic(i), cycle.cyclic(i + 1)));
  return total;
}

i64 nu_global(const UnimodularCycle& cycle) {
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(cycle.size());
  i64 total = 0;
  for (std::ptrdiff_t i = 0; i < d; ++i)
    total = checked_add(total, det2(cycle.cyclic(i), cycle.cyclic(i + 1)));
  return total;
}

}  // namespace unirot
