#include "cwm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cwm/error.hpp"

namespace cwm {

CyclicPartition CyclicPartition::canonicalize(int n, std::vector<IndexSet> parts) {
  if (n < 1 || n > kMaxGroundSize) throw DomainError("ground size " + std::to_string(n) + " out of range");
  IndexSet seen = 0;
  for (IndexSet p : parts) {
    if (p == 0) throw DomainError("partition has an empty part");
    if ((p & ~full_set(n)) != 0) throw DomainError("partition has an index outside 1.." + std::to_string(n));
    if ((p & seen) != 0) throw DomainError("partition parts overlap");
    seen |= p;
  }
  if (seen != full_set(n)) throw DomainError("parts do not cover 1.." + std::to_string(n));
  auto last = std::find_if(parts.begin(), parts.end(), [n](IndexSet p) { return contains(p, n); });
  std::rotate(parts.begin(), last + 1, parts.end());
  return CyclicPartition(n, std::move(parts));
}

CyclicPartition CyclicPartition::canonicalize(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<IndexSet> sets;
  sets.reserve(parts.size());
  for (const auto& part : parts) {
    IndexSet s = 0;
    for (int i : part) {
      if (i < 1 || i > n) throw DomainError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
      if (contains(s, i)) throw DomainError("index " + std::to_string(i) + " repeated");
      s |= element_bit(i);
    }
    sets.push_back(s);
  }
  return canonicalize(n, std::move(sets));
}

CyclicPartition CyclicPartition::parse(std::string_view text, std::optional<int> n) {
  std::vector<std::vector<int>> parts(1);
  int count = 0;
  std::size_t i = 0;
  auto fail = [&] { throw DomainError("malformed label '" + std::string(text) + "'"); };
  bool expect_number = true;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!expect_number) fail();
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxGroundSize) fail();
        ++i;
      }
      parts.back().push_back(v);
      ++count;
      expect_number = false;
    } else if (c == ',' || c == '|') {
      if (expect_number) fail();
      if (c == '|') parts.emplace_back();
      expect_number = true;
      ++i;
    } else {
      fail();
    }
  }
  if (expect_number) fail();
  return canonicalize(n.value_or(count), parts);
}

int CyclicPartition::part_of(int element) const {
  for (int k = 0; k < size(); ++k)
    if (contains(parts_[k], element)) return k;
  throw DomainError("element " + std::to_string(element) + " not in ground set");
}

std::string CyclicPartition::to_string() const {
  std::ostringstream out;
  for (int k = 0; k < size(); ++k) {
    if (k) out << '|';
    bool first = true;
    for (int i : elements_of(parts_[k])) {
      if (!first) out << ',';
      out << i;
      first = false;
    }
  }
  return out.str();
}

std::vector<std::vector<int>> CyclicPartition::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(parts_.size());
  for (IndexSet p : parts_) out.push_back(elements_of(p));
  return out;
}

std::uint64_t CyclicPartition::key() const {
  if (n_ > 16) throw DomainError("partition keys support n <= 16");
  std::uint64_t key = 0;
  for (int k = 0; k < size(); ++k)
    for (IndexSet rest = parts_[k]; rest != 0; rest &= rest - 1)
      key |= static_cast<std::uint64_t>(k) << (4 * (min_element(rest) - 1));
  return key;
}

CyclicPartition CyclicPartition::relabeled(std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != n_) throw DomainError("relabeling has the wrong size");
  std::vector<IndexSet> parts;
  parts.reserve(parts_.size());
  for (IndexSet p : parts_) {
    IndexSet q = 0;
    for (int i : elements_of(p)) q |= element_bit(sigma[i - 1]);
    parts.push_back(q);
  }
  return canonicalize(n_, std::move(parts));
}

CyclicPartition CyclicPartition::reversed() const {
  std::vector<IndexSet> parts(parts_.rbegin(), parts_.rend());
  return canonicalize(n_, std::move(parts));
}

std::strong_ordering operator<=>(const CyclicPartition& a, const CyclicPartition& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  const std::size_t common = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t k = 0; k < common; ++k) {
    int c = compare_as_lists(a.parts_[k], b.parts_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.parts_.size() <=> b.parts_.size();
}

bool is_admissible(const CyclicPartition& p, const Linkage& linkage) {
  if (p.ground_size() != linkage.size())
    throw DomainError("partition of 1.." + std::to_string(p.ground_size()) + " used with an " +
                      std::to_string(linkage.size()) + "-linkage");
  return std::all_of(p.parts().begin(), p.parts().end(), [&](IndexSet part) { return linkage.is_short(part); });
}

bool refines(const CyclicPartition& fine, const CyclicPartition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) throw DomainError("refines: ground sets differ");
  const int a = fine.size(), b = coarse.size();
  if (a < b) return false;
  for (int r = 0; r < a; ++r) {
    int j = 0;
    IndexSet acc = 0;
    bool ok = true;
    for (int t = 0; t < a && ok; ++t) {
      IndexSet f = fine.part((r + t) % a);
      if ((f & ~coarse.part(j)) != 0) {
        ok = false;
        break;
      }
      acc |= f;
      if (acc == coarse.part(j)) {
        ++j;
        acc = 0;
      }
    }
    if (ok && j == b) return true;
  }
  return false;
}

std::optional<std::vector<std::vector<IndexSet>>> refinement_runs(const CyclicPartition& fine,
                                                                   const CyclicPartition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) throw DomainError("refinement_runs: ground sets differ");
  const int a = fine.size(), b = coarse.size();
  if (a < b) return std::nullopt;
  std::vector<std::vector<IndexSet>> runs(b);
  for (int r = 0; r < a; ++r) {
    for (auto& run : runs) run.clear();
    int j = 0;
    IndexSet acc = 0;
    bool ok = true;
    for (int t = 0; t < a; ++t) {
      IndexSet f = fine.part((r + t) % a);
      if (j >= b || (f & ~coarse.part(j)) != 0) {
        ok = false;
        break;
      }
      runs[j].push_back(f);
      acc |= f;
      if (acc == coarse.part(j)) {
        ++j;
        acc = 0;
      }
    }
    if (ok && j == b) return runs;
  }
  return std::nullopt;
}

std::vector<CyclicPartition> coarsenings(const CyclicPartition& p) {
  const int m = p.size();
  std::vector<CyclicPartition> out;
  if (m <= 1) return out;
  // Bit g of `cuts` keeps the boundary between part g and part g+1 (mod m).
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  bool single_emitted = false;
  for (std::uint32_t cuts = 1; cuts < all; ++cuts) {
    if (std::popcount(cuts) == 1) {
      if (single_emitted) continue;
      single_emitted = true;
    }
    std::vector<IndexSet> parts;
    int start = std::countr_zero(cuts) + 1;  // first part after a kept boundary
    IndexSet acc = 0;
    for (int t = 0; t < m; ++t) {
      int k = (start + t) % m;
      acc |= p.part(k);
      if (cuts >> k & 1) {
        parts.push_back(acc);
        acc = 0;
      }
    }
    out.push_back(CyclicPartition::canonicalize(p.ground_size(), std::move(parts)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<CyclicPartition> meet(const CyclicPartition& a, const CyclicPartition& b, const Linkage& linkage) {
  if (!is_admissible(a, linkage) || !is_admissible(b, linkage)) throw DomainError("meet: arguments must be admissible");
  std::vector<CyclicPartition> candidates;
  auto consider = [&](const CyclicPartition& q) {
    if (q.size() >= 3 && is_admissible(q, linkage) && refines(b, q)) candidates.push_back(q);
  };
  consider(a);
  for (const auto& q : coarsenings(a)) consider(q);
  if (candidates.empty()) return std::nullopt;

  std::vector<const CyclicPartition*> finest;
  for (const auto& q : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](const CyclicPartition& r) { return r != q && refines(r, q); });
    if (minimal) finest.push_back(&q);
  }
  if (finest.size() != 1)
    throw InvariantViolation("meet of " + a.to_string() + " and " + b.to_string() + " has " +
                             std::to_string(finest.size()) + " finest common coarsenings");
  return *finest.front();
}

namespace {

// Set partitions of {1..n} into exactly m short blocks (restricted growth).
void collect_blocks(const Linkage& linkage, int element, int m, std::vector<IndexSet>& blocks,
                    std::vector<std::vector<IndexSet>>& out) {
  const int n = linkage.size();
  const int open = static_cast<int>(blocks.size());
  if (n - element + 1 < m - open) return;
  if (element > n) {
    if (open == m) out.push_back(blocks);
    return;
  }
  for (int k = 0; k < open; ++k) {
    IndexSet grown = blocks[k] | element_bit(element);
    if (!linkage.is_short(grown)) continue;
    IndexSet saved = blocks[k];
    blocks[k] = grown;
    collect_blocks(linkage, element + 1, m, blocks, out);
    blocks[k] = saved;
  }
  if (open < m) {
    blocks.push_back(element_bit(element));
    collect_blocks(linkage, element + 1, m, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<CyclicPartition> enumerate_admissible(const Linkage& linkage, int parts_count) {
  const int n = linkage.size();
  if (parts_count < 3 || parts_count > n)
    throw DomainError("parts count " + std::to_string(parts_count) + " out of range 3.." + std::to_string(n));
  std::vector<std::vector<IndexSet>> set_partitions;
  std::vector<IndexSet> blocks;
  collect_blocks(linkage, 1, parts_count, blocks, set_partitions);

  std::vector<CyclicPartition> out;
  for (auto& sp : set_partitions) {
    auto last = std::find_if(sp.begin(), sp.end(), [n](IndexSet s) { return contains(s, n); });
    std::iter_swap(last, sp.end() - 1);
    std::sort(sp.begin(), sp.end() - 1);
    do {
      out.push_back(CyclicPartition::canonicalize(n, sp));
    } while (std::next_permutation(sp.begin(), sp.end() - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cwm

std::size_t std::hash<cwm::CyclicPartition>::operator()(const cwm::CyclicPartition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.ground_size());
  for (cwm::IndexSet s : p.parts()) h = h * 1000003u ^ s;
  return h;
}
