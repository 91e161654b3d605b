#include "unirot/vecn.hpp"

#include <string>
#include <utility>

namespace unirot {

i64 detN(const std::vector<VecN>& rows) {
  const std::size_t m = rows.size();
  if (m == 0) throw ShapeMismatchError("determinant of an empty matrix");
  for (const VecN& row : rows)
    if (row.size() != m)
      throw ShapeMismatchError("determinant needs a square matrix: " + std::to_string(m) +
                               " rows but a row of size " + std::to_string(row.size()));
  std::vector<VecN> a = rows;
  i64 det_sign = 1;
  i64 prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return 0;
      std::swap(a[k], a[pivot]);
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        const i64 num =
            checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j]));
        if (num % prev_pivot != 0)
          throw InternalInconsistencyError("fraction-free elimination produced a remainder");
        a[i][j] = checked_div(num, prev_pivot);
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  return checked_mul(det_sign, a[m - 1][m - 1]);
}

}  // namespace unirot
