#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycloribbon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  const auto check_digits = [&](std::string_view part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_digits(s)) throw std::invalid_argument("malformed rational '" + s + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_digits(num) || !check_digits(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cycloribbon
