#include "cwm/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <unordered_map>

namespace cwm {

std::size_t SparseMatrixGF2::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

int rank_gf2_dense(const SparseMatrixGF2& m) {
  const std::size_t words = (static_cast<std::size_t>(m.rows) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols;
  cols.reserve(m.columns.size());
  for (const auto& c : m.columns) {
    std::vector<std::uint64_t> bits(words, 0);
    for (int r : c) bits[r / 64] ^= std::uint64_t{1} << (r % 64);
    cols.push_back(std::move(bits));
  }
  // pivot_of[row] = index of the reduced column whose lowest set bit is row.
  std::vector<int> pivot_of(m.rows, -1);
  int rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (true) {
      int low = -1;
      for (std::size_t w = 0; w < words; ++w)
        if (c[w] != 0) {
          low = static_cast<int>(w * 64) + std::countr_zero(c[w]);
          break;
        }
      if (low < 0) break;
      if (pivot_of[low] < 0) {
        pivot_of[low] = static_cast<int>(j);
        ++rank;
        break;
      }
      const auto& p = cols[pivot_of[low]];
      for (std::size_t w = 0; w < words; ++w) c[w] ^= p[w];
    }
  }
  return rank;
}

int rank_gf2_sparse(const SparseMatrixGF2& m) {
  // Standard column reduction keyed on the largest row index.
  std::vector<std::vector<int>> cols = m.columns;
  for (auto& c : cols) std::sort(c.begin(), c.end());
  std::unordered_map<int, std::size_t> pivot_of;
  int rank = 0;
  std::vector<int> scratch;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      auto it = pivot_of.find(c.back());
      if (it == pivot_of.end()) {
        pivot_of.emplace(c.back(), j);
        ++rank;
        break;
      }
      const auto& p = cols[it->second];
      scratch.clear();
      std::set_symmetric_difference(c.begin(), c.end(), p.begin(), p.end(), std::back_inserter(scratch));
      c.swap(scratch);
    }
  }
  return rank;
}

int rank_gf2(const SparseMatrixGF2& m) {
  const double bits = static_cast<double>(m.rows) * static_cast<double>(m.cols);
  if (m.nonzeros() <= 100000 && bits <= 512.0 * 1024 * 1024) return rank_gf2_dense(m);
  return rank_gf2_sparse(m);
}

SparseMatrixGF2 multiply_gf2(const SparseMatrixGF2& a, const SparseMatrixGF2& b) {
  SparseMatrixGF2 out{a.rows, b.cols, std::vector<std::vector<int>>(b.cols)};
  std::vector<char> parity(a.rows, 0);
  std::vector<int> touched;
  for (int j = 0; j < b.cols; ++j) {
    touched.clear();
    for (int k : b.columns[j])
      for (int r : a.columns[k]) {
        if (!parity[r] && std::find(touched.begin(), touched.end(), r) == touched.end()) touched.push_back(r);
        parity[r] ^= 1;
      }
    for (int r : touched)
      if (parity[r]) out.columns[j].push_back(r);
    for (int r : touched) parity[r] = 0;
    std::sort(out.columns[j].begin(), out.columns[j].end());
  }
  return out;
}

}  // namespace cwm
