// Exact arithmetic base types. Every quantity in this library is a rational
// number in lowest terms over arbitrary-precision integers; floating point is
// never used.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace eiscoh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational &q) { return denominator(q) == 1; }

// "p/q" with the "/q" part omitted when the denominator is 1. This is the
// canonical serialized form everywhere (reports, JSON, CLI).
inline std::string rational_to_string(const Rational &q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1)
    s += "/" + denominator(q).str();
  return s;
}

// Accepts an optional leading sign, a decimal integer, and an optional
// /denominator. Returns nothing on malformed input (empty parts, stray
// characters, zero denominator).
inline std::optional<Rational> parse_rational(const std::string &text) {
  auto parse_int = [](const std::string &t) -> std::optional<Integer> {
    std::size_t i = 0;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
      neg = t[i] == '-';
      ++i;
    }
    if (i == t.size())
      return std::nullopt;
    Integer v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        return std::nullopt;
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n)
      return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0)
    return std::nullopt;
  return Rational(*n, *d);
}

} // namespace eiscoh
