#pragma once

#include <vector>

#include "cwm/rational.hpp"

namespace cwm {

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

/// Rank of the matrix whose rows are given.
int rank(std::vector<RationalVector> rows);

/// A basis of the row space, in reduced echelon form.
std::vector<RationalVector> row_space_basis(std::vector<RationalVector> rows);

/// A basis of {x : row . x = 0 for every row}, vectors of length `cols`.
std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int cols);

}  // namespace cwm
