#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwm/core.hpp"

namespace cwm {

/// A cyclically ordered partition of {1..n}. Stored in canonical rotation:
/// the part containing n is last. Parts are sets, so there is no order
/// inside a part.
class CyclicPartition {
 public:
  /// Validates that `parts` partition {1..n} and rotates n's part to the end.
  static CyclicPartition canonicalize(int n, std::vector<IndexSet> parts);
  static CyclicPartition canonicalize(int n, const std::vector<std::vector<int>>& parts);

  /// Parses the text form "1|2|3|4,5". The ground size is the number of
  /// listed elements unless given explicitly.
  static CyclicPartition parse(std::string_view text, std::optional<int> n = std::nullopt);

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  /// Cell dimension in the moduli-space complex: #parts - 3.
  int dimension() const { return size() - 3; }
  std::span<const IndexSet> parts() const { return parts_; }
  IndexSet part(int k) const { return parts_[k]; }
  /// Position (0-based, canonical rotation) of the part holding `element`.
  int part_of(int element) const;
  bool all_singletons() const { return size() == n_; }

  std::string to_string() const;
  std::vector<std::vector<int>> to_lists() const;

  /// Injective 64-bit key for n <= 16 (4 bits of part position per element).
  std::uint64_t key() const;

  /// Relabels element i as sigma[i-1]; sigma must be a permutation of 1..n.
  CyclicPartition relabeled(std::span<const int> sigma) const;
  /// The same parts in the opposite cyclic order.
  CyclicPartition reversed() const;

  friend bool operator==(const CyclicPartition&, const CyclicPartition&) = default;
  /// Lexicographic on the part sequence, each part read as an ascending list.
  friend std::strong_ordering operator<=>(const CyclicPartition& a, const CyclicPartition& b);

 private:
  CyclicPartition(int n, std::vector<IndexSet> parts) : n_(n), parts_(std::move(parts)) {}

  int n_ = 0;
  std::vector<IndexSet> parts_;
};

/// True iff every part is short for the linkage. Throws DomainError if the
/// ground sets differ.
bool is_admissible(const CyclicPartition& p, const Linkage& linkage);

/// True iff consecutive runs of `fine`'s parts, for some rotation, union
/// exactly to `coarse`'s parts in cyclic order. Reflexive.
bool refines(const CyclicPartition& fine, const CyclicPartition& coarse);

/// When `fine` refines `coarse`: for each part of `coarse` (canonical order),
/// the run of `fine`'s parts that unions to it, in cyclic order.
std::optional<std::vector<std::vector<IndexSet>>> refinement_runs(const CyclicPartition& fine,
                                                                   const CyclicPartition& coarse);

/// Every strictly coarser cyclic partition obtained by merging cyclically
/// consecutive runs, down to the single part. Sorted.
std::vector<CyclicPartition> coarsenings(const CyclicPartition& p);

/// The finest admissible cyclic partition (at least three parts) refined by
/// both `a` and `b`, or nullopt if none exists. Throws InvariantViolation if
/// the finest candidate is not unique.
std::optional<CyclicPartition> meet(const CyclicPartition& a, const CyclicPartition& b, const Linkage& linkage);

/// All admissible cyclic partitions with exactly `parts_count` parts, in
/// canonical form and lexicographic order.
std::vector<CyclicPartition> enumerate_admissible(const Linkage& linkage, int parts_count);

}  // namespace cwm

template <>
struct std::hash<cwm::CyclicPartition> {
  std::size_t operator()(const cwm::CyclicPartition& p) const noexcept;
};
