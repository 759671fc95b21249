#include "qlogic/linalg.hpp"

#include <numeric>
#include <utility>

#include "qlogic/error.hpp"

namespace qlogic::linalg {

Echelon reduced_row_echelon(Matrix m, const std::vector<std::size_t>& column_order) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  std::size_t next = 0;
  for (std::size_t col : order) {
    if (next == m.size()) break;
    std::size_t pivot = next;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[next]);

    const Rational inv = 1 / m[next][col];
    for (auto& x : m[next]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[next][c];
    }
    out.pivots.push_back(col);
    ++next;
  }
  m.resize(next);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).rows.size(); }

Matrix null_space(const Matrix& m, std::size_t cols) {
  Matrix basis;
  if (m.empty()) {
    for (std::size_t c = 0; c < cols; ++c) {
      RatVector e(cols, 0);
      e[c] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

long affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return static_cast<long>(rank(diffs));
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace qlogic::linalg
