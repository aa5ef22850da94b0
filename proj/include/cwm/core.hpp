#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwm/rational.hpp"

namespace cwm {

// Subsets of {1..n} are bitmasks: element i lives at bit i-1.
using IndexSet = std::uint32_t;

inline constexpr int kMaxLinkageSize = 24;
inline constexpr int kMaxGroundSize = 32;

constexpr IndexSet element_bit(int i) { return IndexSet{1} << (i - 1); }
constexpr IndexSet full_set(int n) {
  return n >= 32 ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
}
constexpr bool contains(IndexSet s, int i) { return (s & element_bit(i)) != 0; }
constexpr int set_size(IndexSet s) { return std::popcount(s); }
constexpr int min_element(IndexSet s) { return std::countr_zero(s) + 1; }

IndexSet make_set(std::initializer_list<int> elements);
IndexSet make_set(std::span<const int> elements);
std::vector<int> elements_of(IndexSet s);

/// Lexicographic comparison of two sets viewed as ascending element lists.
/// Returns <0, 0, >0.
int compare_as_lists(IndexSet a, IndexSet b);

/// A planar polygonal linkage: positive exact edge lengths l_1..l_n with
/// the strict triangle inequality max l_i < sum of the others.
class Linkage {
 public:
  explicit Linkage(std::vector<Rational> lengths);

  int size() const { return static_cast<int>(lengths_.size()); }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& length(int i) const { return lengths_[i - 1]; }
  const Rational& perimeter() const { return perimeter_; }

  /// Sum of l_i over the set.
  Rational sum(IndexSet part) const;

  /// Integer weights proportional to the lengths (common denominator cleared).
  const std::vector<BigInt>& integer_weights() const { return weights_; }

  /// True iff the part's length does not exceed the length of the rest.
  /// No validation; see is_admissible_part for the checked entry point.
  bool is_short(IndexSet part) const;

  /// True iff every length is a positive integer.
  bool has_integer_lengths() const;

  /// Comma-separated "p/q" list, the inverse of parse_lengths.
  std::string to_string() const;

  bool operator==(const Linkage& other) const { return lengths_ == other.lengths_; }

 private:
  std::vector<Rational> lengths_;
  Rational perimeter_;
  std::vector<BigInt> weights_;
  BigInt weight_total_;
  // Fast path when every partial sum fits comfortably in 64 bits.
  std::optional<std::vector<std::int64_t>> small_weights_;
  std::int64_t small_total_ = 0;
};

/// Parses "1,1,1,1/2" or "1.2,1,1,0.8,2.2" into a Linkage.
Linkage parse_lengths(std::string_view text);

/// Checked admissibility of a single part. Throws DomainError on an empty
/// part or an index outside {1..n}.
bool is_admissible_part(IndexSet part, const Linkage& linkage);

/// True iff no subset sums to exactly half the perimeter, i.e. the linkage
/// has no aligned configuration. Exhaustive; throws DomainError for n > 24.
bool is_generic(const Linkage& linkage);

/// A subset witnessing non-genericity (sum equal to half perimeter), if any.
std::optional<IndexSet> find_aligned_split(const Linkage& linkage);

}  // namespace cwm
