#include "cwm/linalg.hpp"

#include <utility>

namespace cwm {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<int> reduce(std::vector<RationalVector>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

int rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(reduce(rows, static_cast<int>(rows.front().size())).size());
}

std::vector<RationalVector> row_space_basis(std::vector<RationalVector> rows) {
  if (rows.empty()) return rows;
  reduce(rows, static_cast<int>(rows.front().size()));
  return rows;
}

std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int cols) {
  auto pivots = reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cwm
