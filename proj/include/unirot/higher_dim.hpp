#pragma once

#include <cstdint>
#include <vector>

#include "unirot/cycles.hpp"
#include "unirot/vecn.hpp"

namespace unirot {

/// Generalized curvature of a collection (a1, b_1..b_n, a2) in Z^{n+1}
/// where (a1, b) and (a2, b) are both bases: nu1 = det(a1, b_1, ..., b_n),
/// nu2 = det(a2, b_1, ..., b_n), and mus is the unique integer vector with
///
///   nu1 * a1 - nu2 * a2 + sum_j mus[j] * b_j = 0.
struct GeneralMu {
  int nu1;
  int nu2;
  std::vector<i64> mus;

  friend bool operator==(const GeneralMu&, const GeneralMu&) = default;
};

/// Computes the curvatures by expressing a2 in the basis (a1, b): the
/// coordinates are exact integers because the basis is unimodular, and
/// mus[j] = nu2 * (b_j-coordinate of a2). The defining equation is
/// re-verified before returning. Throws NotBasisError when either
/// collection is not a basis.
GeneralMu mu_general(const VecN& a1, const std::vector<VecN>& bs, const VecN& a2);

/// Triangulated closed oriented manifold of dimension 1 or 2 together with
/// a lattice image in Z^{dimension+1} for every vertex. Facet vertex order
/// fixes the orientation: dimension 1 facets are directed edges, dimension
/// 2 facets oriented triangles.
struct Triangulation {
  struct Vertex {
    std::int64_t id;
    VecN image;
  };

  int dimension = 1;  // 1 or 2
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::int64_t>> facets;  // dimension+1 vertex ids each
};

/// Checks that the facets form a closed, coherently oriented manifold and
/// that every facet's image vectors are a lattice basis. Returns the
/// argument unchanged; throws NotClosedError, OrientationError or
/// FacetNotUnimodularError (naming the first offending facet).
Triangulation validate_unimodular_map(Triangulation t);

/// Degree of the map about the origin: signed count of facet cones
/// containing a generic ray, the ray drawn from a fixed escape sequence of
/// directions. Exact integer arithmetic throughout; generalizes the planar
/// winding oracle. Validates its input first.
i64 degree(const Triangulation& t);

/// The 1-dimensional triangulation of a planar cycle: vertex i carries
/// image u_i, facets are the directed edges (i, i+1 mod d).
Triangulation triangulation_from_cycle(const UnimodularCycle& cycle);

}  // namespace unirot
