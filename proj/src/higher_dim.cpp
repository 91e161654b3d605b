#include "unirot/higher_dim.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

namespace unirot {

namespace {

void require_dim(const VecN& v, std::size_t m, const char* name) {
  if (v.size() != m)
    throw ShapeMismatchError(std::string(name) + " has dimension " + std::to_string(v.size()) +
                             ", expected " + std::to_string(m));
}

i64 require_basis(const VecN& head, const std::vector<VecN>& bs, const char* name) {
  std::vector<VecN> rows;
  rows.reserve(bs.size() + 1);
  rows.push_back(head);
  for (const VecN& b : bs) rows.push_back(b);
  const i64 det = detN(rows);
  if (det != 1 && det != -1)
    throw NotBasisError(std::string("(") + name + ", b) is not a lattice basis (det " +
                        std::to_string(det) + ")");
  return det;
}

}  // namespace

GeneralMu mu_general(const VecN& a1, const std::vector<VecN>& bs, const VecN& a2) {
  const std::size_t m = a1.size();
  if (m < 2) throw ShapeMismatchError("ambient dimension must be at least 2");
  require_dim(a2, m, "a2");
  if (bs.size() + 1 != m)
    throw ShapeMismatchError("expected " + std::to_string(m - 1) + " shared vectors, got " +
                             std::to_string(bs.size()));
  for (const VecN& b : bs) require_dim(b, m, "shared vector");

  const i64 nu1 = require_basis(a1, bs, "a1");
  const i64 nu2 = require_basis(a2, bs, "a2");

  // Coordinates of a2 in the basis (a1, b_1, ..., b_n) by Cramer's rule;
  // the divisor is nu1 = +-1, so multiplying by it divides exactly.
  const std::size_t n = bs.size();
  std::vector<i64> mus(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<VecN> rows;
    rows.reserve(m);
    rows.push_back(a1);
    for (std::size_t k = 0; k < n; ++k) rows.push_back(k == j ? a2 : bs[k]);
    const i64 coord = checked_mul(nu1, detN(rows));
    mus[j] = checked_mul(nu2, coord);
  }

  // Re-verify the defining equation componentwise.
  for (std::size_t c = 0; c < m; ++c) {
    i64 acc = checked_sub(checked_mul(nu1, a1[c]), checked_mul(nu2, a2[c]));
    for (std::size_t j = 0; j < n; ++j) acc = checked_add(acc, checked_mul(mus[j], bs[j][c]));
    if (acc != 0)
      throw InternalInconsistencyError("generalized curvature equation failed to close");
  }
  return {static_cast<int>(nu1), static_cast<int>(nu2), std::move(mus)};
}

namespace {

using VertexId = std::int64_t;

std::unordered_map<VertexId, const VecN*> image_table(const Triangulation& t) {
  std::unordered_map<VertexId, const VecN*> images;
  images.reserve(t.vertices.size());
  for (const auto& v : t.vertices) {
    if (!images.emplace(v.id, &v.image).second)
      throw ValidationError("duplicate vertex id " + std::to_string(v.id));
    if (v.image.size() != static_cast<std::size_t>(t.dimension) + 1)
      throw ShapeMismatchError("vertex " + std::to_string(v.id) + " image has dimension " +
                               std::to_string(v.image.size()) + ", expected " +
                               std::to_string(t.dimension + 1));
  }
  return images;
}

std::vector<VecN> facet_rows(const Triangulation& t,
                             const std::unordered_map<VertexId, const VecN*>& images,
                             std::size_t f) {
  std::vector<VecN> rows;
  rows.reserve(t.facets[f].size());
  for (const VertexId id : t.facets[f]) {
    const auto it = images.find(id);
    if (it == images.end())
      throw ValidationError("facet " + std::to_string(f) + " references unknown vertex " +
                            std::to_string(id));
    rows.push_back(*it->second);
  }
  return rows;
}

void check_closed_and_oriented(const Triangulation& t) {
  if (t.dimension == 1) {
    std::map<VertexId, std::pair<int, int>> degree;  // out, in
    for (const auto& f : t.facets) {
      degree[f[0]].first += 1;
      degree[f[1]].second += 1;
    }
    for (const auto& v : t.vertices) {
      const auto it = degree.find(v.id);
      const int out = it == degree.end() ? 0 : it->second.first;
      const int in = it == degree.end() ? 0 : it->second.second;
      if (out + in != 2)
        throw NotClosedError("vertex " + std::to_string(v.id) + " lies on " +
                             std::to_string(out + in) + " edges, expected 2");
      if (out != 1)
        throw OrientationError("vertex " + std::to_string(v.id) +
                               " is not traversed coherently");
    }
    return;
  }
  // dimension 2: every undirected edge in exactly two facets, once per
  // direction.
  std::map<std::pair<VertexId, VertexId>, std::pair<int, int>> edges;  // forward, backward
  std::map<VertexId, int> touched;
  for (const auto& f : t.facets) {
    for (std::size_t e = 0; e < 3; ++e) {
      const VertexId p = f[e];
      const VertexId q = f[(e + 1) % 3];
      touched[p] += 1;
      if (p < q)
        edges[{p, q}].first += 1;
      else
        edges[{q, p}].second += 1;
    }
  }
  for (const auto& [key, counts] : edges) {
    const auto [forward, backward] = counts;
    if (forward + backward != 2)
      throw NotClosedError("edge {" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + "} lies in " +
                           std::to_string(forward + backward) + " facets, expected 2");
    if (forward != 1)
      throw OrientationError("edge {" + std::to_string(key.first) + "," +
                             std::to_string(key.second) +
                             "} is traversed twice in the same direction");
  }
  for (const auto& v : t.vertices)
    if (touched.find(v.id) == touched.end())
      throw NotClosedError("vertex " + std::to_string(v.id) + " lies on no facet");
}

}  // namespace

Triangulation validate_unimodular_map(Triangulation t) {
  if (t.dimension != 1 && t.dimension != 2)
    throw ValidationError("dimension must be 1 or 2, got " + std::to_string(t.dimension));
  const auto images = image_table(t);
  const std::size_t facet_size = static_cast<std::size_t>(t.dimension) + 1;
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    if (t.facets[f].size() != facet_size)
      throw ValidationError("facet " + std::to_string(f) + " has " +
                            std::to_string(t.facets[f].size()) + " vertices, expected " +
                            std::to_string(facet_size));
    const i64 det = detN(facet_rows(t, images, f));
    if (det != 1 && det != -1)
      throw FacetNotUnimodularError("facet " + std::to_string(f) +
                                        " image is not a lattice basis (det " +
                                        std::to_string(det) + ")",
                                    f, det);
  }
  if (t.facets.empty()) throw NotClosedError("triangulation has no facets");
  check_closed_and_oriented(t);
  return t;
}

namespace {

// Escape sequence of ray directions: e_1, then component j = j^(k-1) for
// k = 1, 2, ...  Any fixed linear condition excludes only finitely many k.
VecN ray_direction(std::size_t k, std::size_t m) {
  VecN r(m, 0);
  if (k == 0) {
    r[0] = 1;
    return r;
  }
  for (std::size_t j = 0; j < m; ++j) {
    i64 p = 1;
    for (std::size_t e = 1; e < k; ++e) p = checked_mul(p, static_cast<i64>(j) + 1);
    r[j] = p;
  }
  return r;
}

}  // namespace

i64 degree(const Triangulation& t) {
  const Triangulation v = validate_unimodular_map(t);
  const auto images = image_table(v);
  const std::size_t m = static_cast<std::size_t>(v.dimension) + 1;

  std::vector<std::vector<VecN>> facet_bases;
  std::vector<i64> facet_dets;
  facet_bases.reserve(v.facets.size());
  for (std::size_t f = 0; f < v.facets.size(); ++f) {
    facet_bases.push_back(facet_rows(v, images, f));
    facet_dets.push_back(detN(facet_bases.back()));
  }

  constexpr std::size_t kMaxRayTries = 64;
  for (std::size_t k = 0; k < kMaxRayTries; ++k) {
    const VecN ray = ray_direction(k, m);
    i64 total = 0;
    bool degenerate = false;
    for (std::size_t f = 0; f < facet_bases.size() && !degenerate; ++f) {
      // Solve B * lambda = ray for the facet's column basis by Cramer; in
      // row form, replace one row by the ray. det B = +-1, so multiplying
      // by it divides exactly.
      bool inside = true;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<VecN> rows = facet_bases[f];
        rows[i] = ray;
        const i64 lambda = checked_mul(detN(rows), facet_dets[f]);
        if (lambda == 0) {
          degenerate = true;
          break;
        }
        if (lambda < 0) inside = false;
      }
      if (!degenerate && inside) total += sign(facet_dets[f]);
    }
    if (!degenerate) return total;
  }
  throw InternalInconsistencyError("no generic ray direction found");
}

Triangulation triangulation_from_cycle(const UnimodularCycle& cycle) {
  Triangulation t;
  t.dimension = 1;
  const std::size_t d = cycle.size();
  t.vertices.reserve(d);
  t.facets.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    t.vertices.push_back({static_cast<std::int64_t>(i), VecN{cycle[i].x, cycle[i].y}});
    t.facets.push_back({static_cast<std::int64_t>(i),
                        static_cast<std::int64_t>((i + 1) % d)});
  }
  return t;
}

}  // namespace unirot
