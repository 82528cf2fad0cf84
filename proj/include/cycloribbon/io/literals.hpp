#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cycloribbon/hopf/symmetric.hpp"

namespace cycloribbon {

/// Malformed literal; position is a 0-based offset into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what, std::string_view text)
      : std::invalid_argument("at position " + std::to_string(position) + " in '" +
                              std::string(text) + "': " + what),
        position_(position),
        reason_(what) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(xs[k]);
  }
  return s;
}

/// Parses "a,b,c" starting at offset into text; empty input gives an empty list.
inline std::vector<int> parse_int_list(std::string_view text, std::size_t offset,
                                       std::string_view whole, char sep = ',') {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t i = 0;
  while (true) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(offset + i, "expected a positive integer", whole);
    if (i - start > 6) throw ParseError(offset + start, "integer too large", whole);
    const int v = std::stoi(std::string(text.substr(start, i - start)));
    if (v < 1) throw ParseError(offset + start, "integers must be positive", whole);
    out.push_back(v);
    if (i == text.size()) break;
    if (text[i] != sep) throw ParseError(offset + i, std::string("expected '") + sep + "'", whole);
    ++i;
  }
  return out;
}

}  // namespace detail

inline std::string format_ribbon(const ColoredRibbon& r) {
  return detail::join_ints(r.shape.parts(), ',') + "|" + detail::join_ints(r.colors, ',');
}

inline std::string format_colored_composition(const ColoredComposition& cc) {
  std::string s;
  for (std::size_t k = 0; k < cc.length(); ++k) {
    if (k) s += '.';
    s += std::to_string(cc.parts.parts()[k]) + "^" + std::to_string(cc.part_colors[k]);
  }
  return s;
}

inline std::string format_composition(const Composition& c) { return detail::join_ints(c.parts(), ','); }

inline std::string format_multipartition(const Multipartition& mp) {
  std::string s;
  for (std::size_t k = 0; k < mp.components.size(); ++k) {
    if (k) s += '|';
    s += detail::join_ints(mp.components[k], ',');
  }
  return s;
}

inline Composition parse_composition(std::string_view text) {
  return Composition(detail::parse_int_list(text, 0, text));
}

/// "shape|colors", e.g. "1,3|2,1,1,2".
inline ColoredRibbon parse_ribbon(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError(text.size(), "expected '|'", text);
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError(text.find('|', bar + 1), "unexpected second '|'", text);
  auto parts = detail::parse_int_list(text.substr(0, bar), 0, text);
  auto colors = detail::parse_int_list(text.substr(bar + 1), bar + 1, text);
  int n = 0;
  for (int p : parts) n += p;
  if (static_cast<std::size_t>(n) != colors.size())
    throw ParseError(bar + 1,
                     "shape has " + std::to_string(n) + " cells but " +
                         std::to_string(colors.size()) + " colors were given",
                     text);
  return {Composition(std::move(parts)), std::move(colors)};
}

/// "len^color" joined by '.', e.g. "2^1.1^2.2^2".
inline ColoredComposition parse_colored_composition(std::string_view text) {
  std::vector<int> parts;
  ColorWord colors;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    const auto dot = text.find('.', pos);
    const auto piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    const auto caret = piece.find('^');
    if (caret == std::string_view::npos) throw ParseError(pos + piece.size(), "expected '^'", text);
    auto len = detail::parse_int_list(piece.substr(0, caret), pos, text);
    auto col = detail::parse_int_list(piece.substr(caret + 1), pos + caret + 1, text);
    if (len.size() != 1) throw ParseError(pos, "expected one part length", text);
    if (col.size() != 1) throw ParseError(pos + caret + 1, "expected one color", text);
    parts.push_back(len[0]);
    colors.push_back(col[0]);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return {Composition(std::move(parts)), std::move(colors)};
}

/// Components separated by '|', parts by ','; "1,1|" is ((1,1), ()).
inline Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    const auto bar = text.find('|', pos);
    const auto piece = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    comps.push_back(detail::parse_int_list(piece, pos, text));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  try {
    return Multipartition(std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what(), text);
  }
}

inline std::vector<int> parse_int_list(std::string_view text) {
  return detail::parse_int_list(text, 0, text);
}

/// Text form of a label in the given basis.
inline std::string format_label(Basis b, const Label& l) {
  switch (b) {
    case Basis::MR_S:
    case Basis::MR_R:
      return format_colored_composition(to_colored_composition(l));
    case Basis::QMR_F:
      return format_ribbon(to_ribbon(l));
    case Basis::NCSF_R:
      return detail::join_ints(l.parts, ',');
    case Basis::SYM_h: {
      std::string s;
      for (std::size_t k = 0; k < l.parts.size(); ++k) {
        if (k) s += '.';
        s += std::to_string(l.parts[k]) + "^" + std::to_string(l.colors[k]);
      }
      return s;
    }
    case Basis::SYM_s: {
      int r = 0;
      for (int c : l.colors) r = std::max(r, c);
      Multipartition mp;
      mp.components.resize(static_cast<std::size_t>(r));
      for (std::size_t k = 0; k < l.parts.size(); ++k)
        mp.components[static_cast<std::size_t>(l.colors[k] - 1)].push_back(l.parts[k]);
      return format_multipartition(mp);
    }
  }
  return {};
}

inline Label parse_label(Basis b, std::string_view text) {
  switch (b) {
    case Basis::MR_S:
    case Basis::MR_R:
      return to_label(parse_colored_composition(text));
    case Basis::QMR_F: {
      auto ribbon = parse_ribbon(text);
      if (!ribbon.is_cycloribbon()) throw ParseError(0, "ribbon is not a cycloribbon", text);
      return to_label(ribbon);
    }
    case Basis::NCSF_R:
      return to_label(parse_composition(text));
    case Basis::SYM_h: {
      auto cc = parse_colored_composition(text);
      return canonical_h_monomial(to_label(cc));
    }
    case Basis::SYM_s:
      return to_label(parse_multipartition(text));
  }
  return {};
}

/// Sum of terms "[coeff*]label" separated by '+', e.g. "2^1 + 3*1^1.1^1".
inline LinearCombination parse_combination(Basis b, std::string_view text) {
  LinearCombination out(b);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    auto plus = text.find('+', pos);
    if (plus == std::string_view::npos) plus = text.size();
    std::size_t s = pos, e = plus;
    while (s < e && text[s] == ' ') ++s;
    while (e > s && text[e - 1] == ' ') --e;
    if (s == e) throw ParseError(s, "empty term", text);
    auto term = text.substr(s, e - s);
    Rational coeff = 1;
    const auto star = term.find('*');
    if (star != std::string_view::npos) {
      try {
        coeff = parse_rational(term.substr(0, star));
      } catch (const std::invalid_argument&) {
        throw ParseError(s, "malformed coefficient", text);
      }
      term = term.substr(star + 1);
      s += star + 1;
    }
    try {
      out.add(parse_label(b, term), coeff);
    } catch (const ParseError& err) {
      throw ParseError(s + err.position(), err.reason(), text);
    } catch (const std::invalid_argument& err) {
      throw ParseError(s, err.what(), text);
    }
    any = true;
    pos = plus + 1;
    if (plus == text.size()) break;
  }
  if (!any) throw ParseError(0, "empty combination", text);
  return out;
}

}  // namespace cycloribbon
