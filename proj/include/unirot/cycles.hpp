#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unirot/lattice.hpp"
#include "unirot/twelfths.hpp"

namespace unirot {

/// Cyclically closed sequence u_0 ... u_{d-1}, d >= 2, in which every
/// cyclically adjacent pair (including (u_{d-1}, u_0)) is a lattice basis.
/// Every vector is therefore primitive. Instances are validated on
/// construction and immutable afterwards.
class UnimodularCycle {
 public:
  /// Throws TooShortError or NotUnimodularAtError naming the first
  /// offending adjacent pair and its determinant.
  static UnimodularCycle validate(std::vector<Vec2> vectors);

  std::size_t size() const { return vecs_.size(); }
  const Vec2& operator[](std::size_t i) const { return vecs_[i]; }
  /// Index taken modulo the length, so windows may wrap freely.
  const Vec2& cyclic(std::ptrdiff_t i) const;
  const std::vector<Vec2>& vectors() const { return vecs_; }

  UnimodularCycle reversed() const;
  UnimodularCycle transformed(const Gl2& map) const;

  friend bool operator==(const UnimodularCycle&, const UnimodularCycle&) = default;

 private:
  explicit UnimodularCycle(std::vector<Vec2> vecs) : vecs_(std::move(vecs)) {}
  std::vector<Vec2> vecs_;
};

/// Open unimodular sequence: adjacent pairs are bases, no wraparound
/// condition.
class UnimodularPath {
 public:
  static UnimodularPath validate(std::vector<Vec2> vectors);

  std::size_t size() const { return vecs_.size(); }
  const Vec2& operator[](std::size_t i) const { return vecs_[i]; }
  const std::vector<Vec2>& vectors() const { return vecs_; }

  friend bool operator==(const UnimodularPath&, const UnimodularPath&) = default;

 private:
  explicit UnimodularPath(std::vector<Vec2> vecs) : vecs_(std::move(vecs)) {}
  std::vector<Vec2> vecs_;
};

std::string to_string(const UnimodularCycle& cycle);

/// Formal sum of directed edges between lattice points with integer
/// multiplicities. An edge and its reversal are the same entry with
/// opposite signs, so inserting one against the other cancels. Value type
/// with exact equality; used to certify cycle decompositions.
class EdgeCycle {
 public:
  struct Entry {
    std::pair<Vec2, Vec2> endpoints;  // canonical (lexicographically ordered)
    i64 multiplicity;                 // nonzero; sign encodes direction

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  EdgeCycle() = default;
  static EdgeCycle from_edges(const std::vector<std::pair<Vec2, Vec2>>& directed);

  friend EdgeCycle operator+(const EdgeCycle& a, const EdgeCycle& b);
  friend bool operator==(const EdgeCycle&, const EdgeCycle&) = default;

  bool empty() const { return entries_.empty(); }
  std::size_t distinct_edges() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;  // sorted by endpoints, multiplicities nonzero
};

/// The d directed edges u_i -> u_{i+1} of the cycle, with cancellation.
EdgeCycle edge_cycle(const UnimodularCycle& cycle);

/// True iff the edge cycle of `whole` equals the cancelled sum of the edge
/// cycles of the two parts.
bool decomposition_holds(const UnimodularCycle& whole, const UnimodularCycle& part1,
                         const UnimodularCycle& part2);

/// Exact winding number of the closed polygon through the cycle's vectors
/// about the origin: a generic ray is chosen from a fixed direction
/// sequence, and each edge contributes its edge sign when the ray lies
/// strictly inside the cone swept by the edge. Integer predicates only.
i64 rot_winding_exact(const UnimodularCycle& cycle);

/// Same, with a caller-chosen ray direction. Throws ValidationError when
/// the ray is collinear with one of the cycle's vectors.
i64 rot_winding_with_direction(const UnimodularCycle& cycle, Vec2 ray);

/// Rotation number from the curvature sums: (mu(L) + 3 nu(L)) / 12.
/// Divisibility by 12 is asserted; NonIntegerRotationError would mean the
/// closed formula is violated and carries the offending cycle.
i64 rot_formula(const UnimodularCycle& cycle);
Twelfths rot_formula_twelfths(const UnimodularCycle& cycle);

/// Floating-point angle-sum rotation (atan2 of det and dot per edge,
/// divided by 2 pi). Sanity cross-check only; never exact.
double rot_angle_float(const UnimodularCycle& cycle);

}  // namespace unirot
