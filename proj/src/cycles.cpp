#include "unirot/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "unirot/invariants.hpp"

namespace unirot {

namespace {

void check_adjacent(const std::vector<Vec2>& v, std::size_t i, std::size_t next) {
  const i64 d = det2(v[i], v[next]);
  if (d != 1 && d != -1)
    throw NotUnimodularAtError("adjacent pair at index " + std::to_string(i) + ": " +
                                   to_string(v[i]) + ", " + to_string(v[next]) + " has det " +
                                   std::to_string(d),
                               i, d);
}

}  // namespace

UnimodularCycle UnimodularCycle::validate(std::vector<Vec2> vectors) {
  if (vectors.size() < 2)
    throw TooShortError("a cyclic sequence needs at least 2 vectors, got " +
                        std::to_string(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    check_adjacent(vectors, i, (i + 1) % vectors.size());
  return UnimodularCycle(std::move(vectors));
}

const Vec2& UnimodularCycle::cyclic(std::ptrdiff_t i) const {
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(vecs_.size());
  std::ptrdiff_t m = i % d;
  if (m < 0) m += d;
  return vecs_[static_cast<std::size_t>(m)];
}

UnimodularCycle UnimodularCycle::reversed() const {
  std::vector<Vec2> out(vecs_.rbegin(), vecs_.rend());
  return validate(std::move(out));
}

UnimodularCycle UnimodularCycle::transformed(const Gl2& map) const {
  std::vector<Vec2> out;
  out.reserve(vecs_.size());
  for (const Vec2& v : vecs_) out.push_back(apply(map, v));
  return validate(std::move(out));
}

UnimodularPath UnimodularPath::validate(std::vector<Vec2> vectors) {
  if (vectors.size() < 2)
    throw TooShortError("an open sequence needs at least 2 vectors, got " +
                        std::to_string(vectors.size()));
  for (std::size_t i = 0; i + 1 < vectors.size(); ++i) check_adjacent(vectors, i, i + 1);
  return UnimodularPath(std::move(vectors));
}

std::string to_string(const UnimodularCycle& cycle) {
  std::string out = "[";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ",";
    out += to_string(cycle[i]);
  }
  return out + "]";
}

EdgeCycle EdgeCycle::from_edges(const std::vector<std::pair<Vec2, Vec2>>& directed) {
  EdgeCycle out;
  out.entries_.reserve(directed.size());
  for (const auto& [from, to] : directed) {
    if (from == to) throw InternalInconsistencyError("degenerate edge " + to_string(from));
    if (from < to)
      out.entries_.push_back({{from, to}, 1});
    else
      out.entries_.push_back({{to, from}, -1});
  }
  std::sort(out.entries_.begin(), out.entries_.end(),
            [](const Entry& a, const Entry& b) { return a.endpoints < b.endpoints; });
  // Coalesce equal keys; opposite directions cancel here.
  std::vector<Entry> merged;
  for (const Entry& e : out.entries_) {
    if (!merged.empty() && merged.back().endpoints == e.endpoints)
      merged.back().multiplicity = checked_add(merged.back().multiplicity, e.multiplicity);
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.multiplicity == 0; });
  out.entries_ = std::move(merged);
  return out;
}

EdgeCycle operator+(const EdgeCycle& a, const EdgeCycle& b) {
  // Merge two sorted entry lists.
  EdgeCycle out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() ||
        (i < a.entries_.size() && a.entries_[i].endpoints < b.entries_[j].endpoints)) {
      out.entries_.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].endpoints < a.entries_[i].endpoints) {
      out.entries_.push_back(b.entries_[j++]);
    } else {
      const i64 m = checked_add(a.entries_[i].multiplicity, b.entries_[j].multiplicity);
      if (m != 0) out.entries_.push_back({a.entries_[i].endpoints, m});
      ++i;
      ++j;
    }
  }
  return out;
}

EdgeCycle edge_cycle(const UnimodularCycle& cycle) {
  std::vector<std::pair<Vec2, Vec2>> edges;
  edges.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return EdgeCycle::from_edges(edges);
}

bool decomposition_holds(const UnimodularCycle& whole, const UnimodularCycle& part1,
                         const UnimodularCycle& part2) {
  return edge_cycle(whole) == edge_cycle(part1) + edge_cycle(part2);
}

namespace {

// Winding sum for a ray known to avoid all vertex directions; vertex_dets
// holds det2(u_i, ray).
i64 winding_sum(const UnimodularCycle& cycle, const std::vector<i64>& vertex_dets) {
  const std::size_t d = cycle.size();
  i64 total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t next = (i + 1) % d;
    const int s = sign(det2(cycle[i], cycle[next]));
    // Ray strictly inside the cone swept from u_i to u_{i+1}: det2(u_i, ray)
    // and det2(ray, u_{i+1}) both carry the edge's orientation sign.
    if (sign(vertex_dets[i]) == s && sign(vertex_dets[next]) == -s) total += s;
  }
  return total;
}

std::optional<std::vector<i64>> ray_vertex_dets(const UnimodularCycle& cycle, Vec2 ray) {
  std::vector<i64> dets(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    dets[i] = det2(cycle[i], ray);
    if (dets[i] == 0) return std::nullopt;
  }
  return dets;
}

}  // namespace

i64 rot_winding_with_direction(const UnimodularCycle& cycle, Vec2 ray) {
  if (ray == Vec2{0, 0}) throw ZeroVectorError("ray direction must be nonzero");
  auto dets = ray_vertex_dets(cycle, ray);
  if (!dets)
    throw ValidationError("ray " + to_string(ray) + " is collinear with a cycle vector");
  return winding_sum(cycle, *dets);
}

i64 rot_winding_exact(const UnimodularCycle& cycle) {
  // Fixed retry sequence (1,0), (1,1), (2,1), (3,1), ...: pairwise
  // non-collinear, so at most d of them are excluded.
  for (i64 k = 0; k <= static_cast<i64>(cycle.size()) + 1; ++k) {
    const Vec2 ray = k == 0 ? Vec2{1, 0} : Vec2{k, 1};
    if (auto dets = ray_vertex_dets(cycle, ray)) return winding_sum(cycle, *dets);
  }
  throw InternalInconsistencyError("no admissible ray direction found for " + to_string(cycle));
}

Twelfths rot_formula_twelfths(const UnimodularCycle& cycle) {
  return Twelfths{checked_add(mu_global(cycle), checked_mul(3, nu_global(cycle)))};
}

i64 rot_formula(const UnimodularCycle& cycle) {
  const Twelfths t = rot_formula_twelfths(cycle);
  if (!t.is_integral())
    throw NonIntegerRotationError("curvature sum " + to_string(t) +
                                  " is not a whole number of turns for cycle " + to_string(cycle));
  return t.num / 12;
}

double rot_angle_float(const UnimodularCycle& cycle) {
  // Pure double evaluation; det/dot are formed in floating point so the
  // cross-check never overflows even on coordinates the exact kernel rejects.
  const std::size_t d = cycle.size();
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec2 u = cycle[i];
    const Vec2 v = cycle[(i + 1) % d];
    const double det = static_cast<double>(u.x) * static_cast<double>(v.y) -
                       static_cast<double>(u.y) * static_cast<double>(v.x);
    const double dot = static_cast<double>(u.x) * static_cast<double>(v.x) +
                       static_cast<double>(u.y) * static_cast<double>(v.y);
    total += std::atan2(det, dot);
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace unirot
