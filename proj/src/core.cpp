#include "cwm/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cwm/error.hpp"

namespace cwm {

IndexSet make_set(std::initializer_list<int> elements) {
  return make_set(std::span<const int>(elements.begin(), elements.size()));
}

IndexSet make_set(std::span<const int> elements) {
  IndexSet s = 0;
  for (int i : elements) {
    if (i < 1 || i > kMaxGroundSize) throw DomainError("index " + std::to_string(i) + " out of range");
    s |= element_bit(i);
  }
  return s;
}

std::vector<int> elements_of(IndexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    out.push_back(min_element(s));
    s &= s - 1;
  }
  return out;
}

int compare_as_lists(IndexSet a, IndexSet b) {
  while (a != 0 && b != 0) {
    int x = min_element(a), y = min_element(b);
    if (x != y) return x < y ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == b) return 0;
  return a == 0 ? -1 : 1;
}

Linkage::Linkage(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  const int n = size();
  if (n < 3) throw DomainError("a linkage needs at least 3 edges, got " + std::to_string(n));
  if (n > kMaxGroundSize)
    throw DomainError("linkages with more than " + std::to_string(kMaxGroundSize) + " edges are not supported");
  for (const auto& l : lengths_)
    if (l <= 0) throw DomainError("edge lengths must be positive, got " + to_fraction_string(l));
  perimeter_ = 0;
  for (const auto& l : lengths_) perimeter_ += l;
  const auto& longest = *std::max_element(lengths_.begin(), lengths_.end());
  if (2 * longest >= perimeter_)
    throw DomainError("triangle inequality fails: longest edge " + to_fraction_string(longest) +
                      " is not shorter than the sum of the others");

  BigInt common = 1;
  for (const auto& l : lengths_) {
    const BigInt& d = boost::multiprecision::denominator(l);
    common = common / boost::multiprecision::gcd(common, d) * d;
  }
  weights_.reserve(n);
  weight_total_ = 0;
  for (const auto& l : lengths_) {
    weights_.push_back(boost::multiprecision::numerator(l) * (common / boost::multiprecision::denominator(l)));
    weight_total_ += weights_.back();
  }
  if (weight_total_ < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small;
    small.reserve(n);
    for (const auto& w : weights_) small.push_back(w.convert_to<std::int64_t>());
    small_weights_ = std::move(small);
    small_total_ = weight_total_.convert_to<std::int64_t>();
  }
}

Rational Linkage::sum(IndexSet part) const {
  Rational s = 0;
  for (int i : elements_of(part)) s += lengths_[i - 1];
  return s;
}

bool Linkage::is_short(IndexSet part) const {
  if (small_weights_) {
    std::int64_t s = 0;
    for (IndexSet rest = part; rest != 0; rest &= rest - 1) s += (*small_weights_)[min_element(rest) - 1];
    return 2 * s <= small_total_;
  }
  BigInt s = 0;
  for (IndexSet rest = part; rest != 0; rest &= rest - 1) s += weights_[min_element(rest) - 1];
  return 2 * s <= weight_total_;
}

bool Linkage::has_integer_lengths() const {
  return std::all_of(lengths_.begin(), lengths_.end(),
                     [](const Rational& l) { return boost::multiprecision::denominator(l) == 1; });
}

std::string Linkage::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out << ',';
    out << to_fraction_string(lengths_[i]);
  }
  return out.str();
}

Linkage parse_lengths(std::string_view text) {
  std::vector<Rational> lengths;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    lengths.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Linkage(std::move(lengths));
}

bool is_admissible_part(IndexSet part, const Linkage& linkage) {
  if (part == 0) throw DomainError("empty part");
  if ((part & ~full_set(linkage.size())) != 0)
    throw DomainError("part has an index outside 1.." + std::to_string(linkage.size()));
  return linkage.is_short(part);
}

std::optional<IndexSet> find_aligned_split(const Linkage& linkage) {
  const int n = linkage.size();
  if (n > kMaxLinkageSize)
    throw DomainError("linkage too large for the exhaustive genericity check (n = " + std::to_string(n) +
                      " > " + std::to_string(kMaxLinkageSize) + ")");
  const auto& w = linkage.integer_weights();
  BigInt total = 0;
  for (const auto& x : w) total += x;
  // A split and its complement are equivalent, so subsets avoiding n suffice.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  bool small = total < BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  if (small) {
    std::vector<std::int64_t> sw;
    for (const auto& x : w) sw.push_back(x.convert_to<std::int64_t>());
    const std::int64_t t = total.convert_to<std::int64_t>();
    std::int64_t s = 0;
    IndexSet gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
      int bit = std::countr_zero(k);
      gray ^= IndexSet{1} << bit;
      s += (gray >> bit & 1) ? sw[bit] : -sw[bit];
      if (2 * s == t) return gray;
    }
    return std::nullopt;
  }
  BigInt s = 0;
  IndexSet gray = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    int bit = std::countr_zero(k);
    gray ^= IndexSet{1} << bit;
    if (gray >> bit & 1)
      s += w[bit];
    else
      s -= w[bit];
    if (2 * s == total) return gray;
  }
  return std::nullopt;
}

bool is_generic(const Linkage& linkage) { return !find_aligned_split(linkage).has_value(); }

}  // namespace cwm
