#include "cwm/rational.hpp"

#include <cctype>

#include "cwm/error.hpp"

namespace cwm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw DomainError("malformed rational '" + original + "'");
    BigInt d = parse_digits(den);
    if (d == 0) throw DomainError("zero denominator in '" + original + "'");
    value = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw DomainError("malformed decimal '" + original + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_digits(frac);
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw DomainError("malformed number '" + original + "'");
    value = Rational(parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace cwm
