#pragma once

#include <vector>

#include "unirot/checked.hpp"

namespace unirot {

/// Lattice vector in Z^m. Dimension consistency is enforced by the
/// operations, not the type.
using VecN = std::vector<i64>;

/// Exact determinant of the square matrix with the given rows, by
/// fraction-free (Bareiss) elimination; every division is exact. Throws
/// ShapeMismatchError unless the rows form a nonempty square matrix.
i64 detN(const std::vector<VecN>& rows);

}  // namespace unirot
