#pragma once

#include <cstddef>
#include <vector>

namespace cwm {

/// A matrix over the two-element field, stored as sorted row indices per
/// column.
struct SparseMatrixGF2 {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> columns;

  std::size_t nonzeros() const;
};

int rank_gf2_dense(const SparseMatrixGF2& m);
int rank_gf2_sparse(const SparseMatrixGF2& m);

/// Dense elimination up to ~1e5 nonzeros (and a bounded bit footprint),
/// sparse column reduction above.
int rank_gf2(const SparseMatrixGF2& m);

/// The product a*b over GF(2) (a.cols == b.rows).
SparseMatrixGF2 multiply_gf2(const SparseMatrixGF2& a, const SparseMatrixGF2& b);

}  // namespace cwm
