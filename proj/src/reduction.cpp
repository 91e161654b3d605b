#include "unirot/reduction.hpp"

#include <string>

#include "unirot/invariants.hpp"

namespace unirot {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::PruneBacktrack: return "prune_backtrack";
    case StepKind::SplitTriangle: return "split_triangle";
    case StepKind::SplitQuad: return "split_quad";
    case StepKind::SplitAtRepeat: return "split_at_repeat";
    case StepKind::BaseTriangle: return "base_triangle";
    case StepKind::BasePair: return "base_pair";
  }
  return "unknown";
}

namespace {

std::vector<Vec2> erase_cyclic(const UnimodularCycle& cycle, std::size_t a, std::size_t b) {
  std::vector<Vec2> out;
  out.reserve(cycle.size() - 2);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (i != a && i != b) out.push_back(cycle[i]);
  return out;
}

}  // namespace

std::size_t find_special_index(const UnimodularCycle& cycle) {
  if (cycle.size() < 3)
    throw PreconditionError("special-window search needs length >= 3, got " +
                            std::to_string(cycle.size()));
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(cycle.size());
  for (std::ptrdiff_t j = 0; j < d; ++j) {
    const i64 m = mu_local(cycle.cyclic(j - 1), cycle.cyclic(j), cycle.cyclic(j + 1));
    if (m >= -1 && m <= 1) return static_cast<std::size_t>(j);
  }
  throw LemmaViolatedError("no window with curvature in {-1,0,+1} in " + to_string(cycle));
}

UnimodularCycle prune_backtrack(const UnimodularCycle& cycle, std::size_t j) {
  const std::size_t d = cycle.size();
  if (j >= d) throw PatternMismatchError("window index " + std::to_string(j) + " out of range");
  if (d < 4)
    throw PatternMismatchError("pruning needs length >= 4, got " + std::to_string(d));
  const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(j);
  if (cycle.cyclic(sj + 1) != cycle.cyclic(sj - 1))
    throw PatternMismatchError("no back-and-forth at window " + std::to_string(j) + " of " +
                               to_string(cycle));
  return UnimodularCycle::validate(erase_cyclic(cycle, j, (j + 1) % d));
}

std::pair<UnimodularCycle, UnimodularCycle> split_triangle(const UnimodularCycle& cycle,
                                                           std::size_t j) {
  const std::size_t d = cycle.size();
  if (j >= d) throw PreconditionError("window index " + std::to_string(j) + " out of range");
  if (d < 4)
    throw PreconditionError("triangle split needs length >= 4, got " + std::to_string(d));
  const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(j);
  const Vec2 a = cycle.cyclic(sj - 1);
  const Vec2 x = cycle.cyclic(sj);
  const Vec2 b = cycle.cyclic(sj + 1);
  const i64 det = det2(a, b);
  if (det != 1 && det != -1)
    throw PreconditionError("window " + std::to_string(j) + " flanks have det " +
                            std::to_string(det) + ", need +-1");
  std::vector<Vec2> rest;
  rest.reserve(d - 1);
  for (std::size_t i = 0; i < d; ++i)
    if (i != j) rest.push_back(cycle[i]);
  return {UnimodularCycle::validate(std::move(rest)), UnimodularCycle::validate({a, x, b})};
}

std::pair<UnimodularCycle, UnimodularCycle> split_quad(const UnimodularCycle& cycle,
                                                       std::size_t j) {
  const std::size_t d = cycle.size();
  if (j >= d) throw PreconditionError("window index " + std::to_string(j) + " out of range");
  if (d < 4) throw PreconditionError("quad split needs length >= 4, got " + std::to_string(d));
  const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(j);
  const Vec2 a = cycle.cyclic(sj - 1);
  if (cycle.cyclic(sj + 1) != -a)
    throw PreconditionError("window " + std::to_string(j) +
                            " is not of the form (a, x, -a)");
  UnimodularCycle quad = UnimodularCycle::validate(
      {a, cycle.cyclic(sj), cycle.cyclic(sj + 1), cycle.cyclic(sj + 2)});
  UnimodularCycle rest =
      UnimodularCycle::validate(erase_cyclic(cycle, j, (j + 1) % d));
  return {std::move(rest), std::move(quad)};
}

std::pair<UnimodularCycle, UnimodularCycle> split_at_repeat(const UnimodularCycle& cycle,
                                                            std::size_t i, std::size_t j) {
  const std::size_t d = cycle.size();
  if (i >= d || j >= d)
    throw PreconditionError("cut positions out of range for length " + std::to_string(d));
  if (i == j) throw NoRepeatError("cut positions must differ");
  if (i > j) std::swap(i, j);
  if (cycle[i] != cycle[j])
    throw NoRepeatError("vectors at positions " + std::to_string(i) + " and " +
                        std::to_string(j) + " differ: " + to_string(cycle[i]) + " vs " +
                        to_string(cycle[j]));
  const std::size_t len_inner = j - i;
  const std::size_t len_outer = d - len_inner;
  if (len_inner < 2 || len_outer < 2)
    throw FragmentTooShortError("cut at " + std::to_string(i) + "," + std::to_string(j) +
                                " leaves a fragment shorter than 2");
  std::vector<Vec2> inner(cycle.vectors().begin() + static_cast<std::ptrdiff_t>(i),
                          cycle.vectors().begin() + static_cast<std::ptrdiff_t>(j));
  std::vector<Vec2> outer;
  outer.reserve(len_outer);
  for (std::size_t k = j; k < d; ++k) outer.push_back(cycle[k]);
  for (std::size_t k = 0; k < i; ++k) outer.push_back(cycle[k]);
  return {UnimodularCycle::validate(std::move(inner)),
          UnimodularCycle::validate(std::move(outer))};
}

Twelfths triangle_rot_twelfths(Vec2 u, Vec2 v, Vec2 w) {
  const TripleInvariants t = triple_invariants(u, v, w);
  return twelfths_from_quarters(t.mu + t.alpha + t.beta + t.gamma);
}

ReductionResult rot_by_reduction(const UnimodularCycle& cycle) {
  ReductionTrace trace;
  UnimodularCycle work = cycle;
  for (;;) {
    const std::size_t d = work.size();
    if (d == 2) {
      trace.steps.push_back({StepKind::BasePair, 0, 0, work.vectors(), Twelfths{0}});
      break;
    }
    if (d == 3) {
      const Twelfths c = triangle_rot_twelfths(work[0], work[1], work[2]);
      trace.steps.push_back({StepKind::BaseTriangle, 0, 0, work.vectors(), c});
      trace.total += c;
      break;
    }
    const std::size_t j = find_special_index(work);
    const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(j);
    const Vec2 a = work.cyclic(sj - 1);
    const Vec2 b = work.cyclic(sj + 1);
    if (b == a) {
      work = prune_backtrack(work, j);
      trace.steps.push_back({StepKind::PruneBacktrack, j, 0, {}, Twelfths{0}});
      continue;
    }
    const i64 m = mu_local(a, work[j], b);
    if (m == 1 || m == -1) {
      auto [rest, tri] = split_triangle(work, j);
      const Twelfths c = triangle_rot_twelfths(tri[0], tri[1], tri[2]);
      trace.steps.push_back({StepKind::SplitTriangle, j, 0, tri.vectors(), c});
      trace.total += c;
      work = std::move(rest);
      continue;
    }
    // m == 0 with b != a forces b == -a (both are primitive).
    auto [rest, quad] = split_quad(work, j);
    const Twelfths c = twelfths_from_quarters(nu_global(quad));
    trace.steps.push_back({StepKind::SplitQuad, j, 0, quad.vectors(), c});
    trace.total += c;
    work = std::move(rest);
  }
  if (!trace.total.is_integral())
    throw NonIntegerRotationError("reduction total " + to_string(trace.total) +
                                  " is not a whole number of turns for " + to_string(cycle));
  return {trace.total.num / 12, std::move(trace)};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistencyError("trace replay: " + what);
}

void check_split(const UnimodularCycle& whole, const UnimodularCycle& rest,
                 const UnimodularCycle& detached) {
  require(mu_global(whole) == checked_add(mu_global(rest), mu_global(detached)),
          "mu not additive across split of " + to_string(whole));
  require(nu_global(whole) == checked_add(nu_global(rest), nu_global(detached)),
          "nu not additive across split of " + to_string(whole));
  require(decomposition_holds(whole, rest, detached),
          "edge cycle does not decompose for " + to_string(whole));
}

}  // namespace

std::size_t replay_trace_checked(const UnimodularCycle& cycle, const ReductionTrace& trace) {
  UnimodularCycle work = cycle;
  Twelfths total{0};
  std::size_t checked = 0;
  for (const ReductionStep& step : trace.steps) {
    switch (step.kind) {
      case StepKind::BasePair:
        require(work.size() == 2, "base pair reached at length != 2");
        require(step.contribution == Twelfths{0}, "base pair contribution nonzero");
        break;
      case StepKind::BaseTriangle: {
        require(work.size() == 3, "base triangle reached at length != 3");
        require(step.detached == work.vectors(), "base triangle differs from working cycle");
        require(step.contribution == triangle_rot_twelfths(work[0], work[1], work[2]),
                "base triangle contribution mismatch");
        break;
      }
      case StepKind::PruneBacktrack: {
        UnimodularCycle pruned = prune_backtrack(work, step.index);
        require(mu_global(pruned) == mu_global(work), "mu changed by pruning");
        require(nu_global(pruned) == nu_global(work), "nu changed by pruning");
        require(edge_cycle(pruned) == edge_cycle(work), "edge cycle changed by pruning");
        require(step.contribution == Twelfths{0}, "pruning contribution nonzero");
        work = std::move(pruned);
        ++checked;
        break;
      }
      case StepKind::SplitTriangle: {
        auto [rest, tri] = split_triangle(work, step.index);
        require(tri.vectors() == step.detached, "detached triangle differs from trace");
        require(step.contribution == triangle_rot_twelfths(tri[0], tri[1], tri[2]),
                "triangle contribution mismatch");
        check_split(work, rest, tri);
        work = std::move(rest);
        ++checked;
        break;
      }
      case StepKind::SplitQuad: {
        auto [rest, quad] = split_quad(work, step.index);
        require(quad.vectors() == step.detached, "detached quad differs from trace");
        require(step.contribution == twelfths_from_quarters(nu_global(quad)),
                "quad contribution mismatch");
        check_split(work, rest, quad);
        work = std::move(rest);
        ++checked;
        break;
      }
      case StepKind::SplitAtRepeat:
        throw ValidationError("trace replay does not support split_at_repeat steps");
    }
    total += step.contribution;
  }
  require(total == trace.total, "accumulated total differs from trace total");
  return checked;
}

}  // namespace unirot
