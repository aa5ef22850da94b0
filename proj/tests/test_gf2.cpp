#include <doctest.h>

#include <random>

#include "cwm/gf2.hpp"
#include "oracles.hpp"

namespace {

cwm::SparseMatrixGF2 random_matrix(int rows, int cols, double density, std::mt19937& rng) {
  std::bernoulli_distribution bit(density);
  cwm::SparseMatrixGF2 m{rows, cols, std::vector<std::vector<int>>(cols)};
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      if (bit(rng)) m.columns[c].push_back(r);
  return m;
}

std::vector<std::vector<bool>> dense_rows(const cwm::SparseMatrixGF2& m) {
  std::vector<std::vector<bool>> rows(m.rows, std::vector<bool>(m.cols, false));
  for (int c = 0; c < m.cols; ++c)
    for (int r : m.columns[c]) rows[r][c] = true;
  return rows;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  cwm::SparseMatrixGF2 empty{0, 0, {}};
  CHECK(cwm::rank_gf2(empty) == 0);
  cwm::SparseMatrixGF2 identity{3, 3, {{0}, {1}, {2}}};
  CHECK(cwm::rank_gf2(identity) == 3);
  // Columns 0+1 = column 2 over GF(2).
  cwm::SparseMatrixGF2 dependent{3, 3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(cwm::rank_gf2(dependent) == 2);
  CHECK(dependent.nonzeros() == 6);
}

TEST_CASE("dense and sparse rank agree with boolean elimination") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(0, 40);
    int rows = size(rng), cols = size(rng);
    double density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    auto m = random_matrix(rows, cols, density, rng);
    int expected = oracle::rank_gf2(dense_rows(m));
    CHECK(cwm::rank_gf2_dense(m) == expected);
    CHECK(cwm::rank_gf2_sparse(m) == expected);
    CHECK(cwm::rank_gf2(m) == expected);
  }
}

TEST_CASE("rank of wide matrices past one machine word") {
  std::mt19937 rng(7);
  auto m = random_matrix(150, 200, 0.05, rng);
  CHECK(cwm::rank_gf2_dense(m) == oracle::rank_gf2(dense_rows(m)));
  CHECK(cwm::rank_gf2_sparse(m) == cwm::rank_gf2_dense(m));
}

TEST_CASE("product over GF(2)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(6, 7, 0.4, rng);
    auto b = random_matrix(7, 5, 0.4, rng);
    auto p = cwm::multiply_gf2(a, b);
    auto ra = dense_rows(a), rb = dense_rows(b), rp = dense_rows(p);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 5; ++j) {
        bool s = false;
        for (int k = 0; k < 7; ++k) s ^= ra[i][k] && rb[k][j];
        CHECK(rp[i][j] == s);
      }
  }
}
