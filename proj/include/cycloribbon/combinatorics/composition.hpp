#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycloribbon {

using Color = int;
/// Word over the color set {1, ..., r}.
using ColorWord = std::vector<Color>;

/// Finite sequence of positive integers. Equivalent data: n together with the
/// descent set {i1, i1+i2, ...} of partial sums strictly below n.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }

  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// Inverse of descents(). D must lie in {1, ..., n-1}.
  static Composition from_descents(int n, std::span<const int> descents) {
    if (n < 0) throw std::invalid_argument("negative composition size");
    std::vector<int> d(descents.begin(), descents.end());
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
      throw std::invalid_argument("repeated descent position");
    std::vector<int> parts;
    int prev = 0;
    for (int x : d) {
      if (x <= 0 || x >= n)
        throw std::invalid_argument("descent " + std::to_string(x) + " outside {1,...," +
                                    std::to_string(n - 1) + "}");
      parts.push_back(x - prev);
      prev = x;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
  }

  /// Composition of n whose descent set is given by bit i-1 of mask.
  static Composition from_descent_mask(int n, std::uint64_t mask) {
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1U) d.push_back(i);
    return from_descents(n, d);
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  std::vector<int> descents() const {
    std::vector<int> d;
    int acc = 0;
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k) d.push_back(acc += parts_[k]);
    return d;
  }

  /// flags[i] is true iff i is a descent, for i in [0, n]; flags[0] and flags[n] are false.
  std::vector<bool> descent_flags() const {
    std::vector<bool> flags(static_cast<std::size_t>(size()) + 1, false);
    for (int d : descents()) flags[static_cast<std::size_t>(d)] = true;
    return flags;
  }

  std::uint64_t descent_mask() const {
    std::uint64_t m = 0;
    for (int d : descents()) m |= std::uint64_t{1} << (d - 1);
    return m;
  }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Composition concatenate(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

/// All compositions of n, ordered by descent mask.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(Composition::from_descent_mask(n, m));
  return out;
}

inline void check_colors(const ColorWord& c, int r) {
  for (Color x : c)
    if (x < 1 || x > r)
      throw std::invalid_argument("color " + std::to_string(x) + " outside {1,...," +
                                  std::to_string(r) + "}");
}

/// A composition diagram whose cells, read row by row, carry the colors.
struct ColoredRibbon {
  Composition shape;
  ColorWord colors;

  ColoredRibbon() = default;
  ColoredRibbon(Composition s, ColorWord c) : shape(std::move(s)), colors(std::move(c)) {
    if (static_cast<std::size_t>(shape.size()) != colors.size())
      throw std::invalid_argument("ribbon shape and color word have different sizes");
    for (Color x : colors)
      if (x < 1) throw std::invalid_argument("colors must be positive");
  }

  int size() const { return static_cast<int>(colors.size()); }

  /// Weakly increasing along rows, weakly decreasing down columns.
  bool is_cycloribbon() const {
    const auto flags = shape.descent_flags();
    for (std::size_t i = 1; i < colors.size(); ++i) {
      if (flags[i] ? colors[i - 1] < colors[i] : colors[i - 1] > colors[i]) return false;
    }
    return true;
  }

  bool is_anticycloribbon() const {
    const auto flags = shape.descent_flags();
    for (std::size_t i = 1; i < colors.size(); ++i) {
      if (flags[i] ? colors[i - 1] > colors[i] : colors[i - 1] < colors[i]) return false;
    }
    return true;
  }

  auto operator<=>(const ColoredRibbon&) const = default;
};

/// Canonical ordering for ribbons: descent mask of the shape, then colors.
struct CanonicalRibbonLess {
  bool operator()(const ColoredRibbon& a, const ColoredRibbon& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ma = a.shape.descent_mask(), mb = b.shape.descent_mask();
    if (ma != mb) return ma < mb;
    return a.colors < b.colors;
  }
};

/// Composition with one color per part.
struct ColoredComposition {
  Composition parts;
  ColorWord part_colors;

  ColoredComposition() = default;
  ColoredComposition(Composition p, ColorWord c) : parts(std::move(p)), part_colors(std::move(c)) {
    if (parts.length() != part_colors.size())
      throw std::invalid_argument("colored composition needs one color per part");
    for (Color x : part_colors)
      if (x < 1) throw std::invalid_argument("colors must be positive");
  }

  int size() const { return parts.size(); }
  std::size_t length() const { return parts.length(); }

  auto operator<=>(const ColoredComposition&) const = default;
};

struct CanonicalColoredCompositionLess {
  bool operator()(const ColoredComposition& a, const ColoredComposition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ma = a.parts.descent_mask(), mb = b.parts.descent_mask();
    if (ma != mb) return ma < mb;
    return a.part_colors < b.part_colors;
  }
};

inline ColoredComposition concatenate(const ColoredComposition& a, const ColoredComposition& b) {
  ColorWord c = a.part_colors;
  c.insert(c.end(), b.part_colors.begin(), b.part_colors.end());
  return {concatenate(a.parts, b.parts), std::move(c)};
}

/// The involution exchanging cycloribbons and anticycloribbons: a position
/// keeps its row/column step when the adjacent colors agree and flips it
/// when they differ.
inline ColoredRibbon phi(const ColoredRibbon& ribbon) {
  const auto flags = ribbon.shape.descent_flags();
  std::vector<int> out;
  for (std::size_t i = 1; i < ribbon.colors.size(); ++i) {
    const bool same = ribbon.colors[i - 1] == ribbon.colors[i];
    if (same == static_cast<bool>(flags[i])) out.push_back(static_cast<int>(i));
  }
  return {Composition::from_descents(ribbon.size(), out), ribbon.colors};
}

/// Cells of part k get color u_k; a part boundary is a descent iff
/// u_k <= u_{k+1}.
inline ColoredRibbon colored_comp_to_anticycloribbon(const ColoredComposition& cc) {
  ColorWord colors;
  std::vector<int> descents;
  int pos = 0;
  const auto& parts = cc.parts.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    colors.insert(colors.end(), static_cast<std::size_t>(parts[k]), cc.part_colors[k]);
    pos += parts[k];
    if (k + 1 < parts.size() && cc.part_colors[k] <= cc.part_colors[k + 1]) descents.push_back(pos);
  }
  return {Composition::from_descents(pos, descents), std::move(colors)};
}

inline ColoredComposition anticycloribbon_to_colored_comp(const ColoredRibbon& ribbon) {
  if (!ribbon.is_anticycloribbon())
    throw std::invalid_argument("colored ribbon is not an anticycloribbon");
  const auto flags = ribbon.shape.descent_flags();
  std::vector<int> parts;
  ColorWord colors;
  int len = 0;
  for (std::size_t i = 0; i < ribbon.colors.size(); ++i) {
    ++len;
    const bool last = i + 1 == ribbon.colors.size();
    if (last || ribbon.colors[i] != ribbon.colors[i + 1] || flags[i + 1]) {
      parts.push_back(len);
      colors.push_back(ribbon.colors[i]);
      len = 0;
    }
  }
  return {Composition(std::move(parts)), std::move(colors)};
}

namespace detail {

// Cell-by-cell growth: r choices for the first cell, then one step per
// admissible (color, row/column) pair. A fixed shape pins the step pattern.
inline void grow_ribbons(int n, int r, const std::vector<bool>* fixed, std::vector<bool>& desc,
                         ColorWord& colors, std::vector<ColoredRibbon>& out, bool cyclo) {
  const auto i = colors.size();
  if (i == static_cast<std::size_t>(n)) {
    std::vector<int> d;
    for (int k = 1; k < n; ++k)
      if (desc[static_cast<std::size_t>(k)]) d.push_back(k);
    out.emplace_back(Composition::from_descents(n, d), colors);
    return;
  }
  for (Color c = 1; c <= r; ++c) {
    colors.push_back(c);
    if (i == 0) {
      grow_ribbons(n, r, fixed, desc, colors, out, cyclo);
    } else {
      const Color prev = colors[i - 1];
      const bool row_ok = cyclo ? prev <= c : prev >= c;
      const bool col_ok = cyclo ? prev >= c : prev <= c;
      const bool want_row = !fixed || !(*fixed)[i];
      const bool want_col = !fixed || (*fixed)[i];
      if (row_ok && want_row) {
        desc[i] = false;
        grow_ribbons(n, r, fixed, desc, colors, out, cyclo);
      }
      if (col_ok && want_col) {
        desc[i] = true;
        grow_ribbons(n, r, fixed, desc, colors, out, cyclo);
        desc[i] = false;
      }
    }
    colors.pop_back();
  }
}

inline std::vector<ColoredRibbon> enumerate_ribbons(int n, int r, const Composition* shape,
                                                    bool cyclo) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumeration needs n >= 0 and r >= 1");
  if (shape && shape->size() != n) throw std::invalid_argument("shape is not a composition of n");
  std::vector<ColoredRibbon> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<bool> desc(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> fixed;
  if (shape) fixed = shape->descent_flags();
  ColorWord colors;
  colors.reserve(static_cast<std::size_t>(n));
  grow_ribbons(n, r, shape ? &fixed : nullptr, desc, colors, out, cyclo);
  std::sort(out.begin(), out.end(), CanonicalRibbonLess{});
  return out;
}

}  // namespace detail

/// All cycloribbons of size n over r colors (of the given shape, if any), in
/// canonical order. There are r(r+1)^(n-1) of them.
inline std::vector<ColoredRibbon> enumerate_cycloribbons(int n, int r,
                                                         const Composition* shape = nullptr) {
  return detail::enumerate_ribbons(n, r, shape, true);
}

inline std::vector<ColoredRibbon> enumerate_anticycloribbons(int n, int r,
                                                             const Composition* shape = nullptr) {
  return detail::enumerate_ribbons(n, r, shape, false);
}

/// All colored compositions of n over r colors, in canonical order.
inline std::vector<ColoredComposition> enumerate_colored_compositions(int n, int r) {
  std::vector<ColoredComposition> out;
  for (const auto& ribbon : enumerate_anticycloribbons(n, r))
    out.push_back(anticycloribbon_to_colored_comp(ribbon));
  std::sort(out.begin(), out.end(), CanonicalColoredCompositionLess{});
  return out;
}

/// Words covered by c in the order <=_I: sort an adjacent row pair into
/// increasing order, or an adjacent column pair into decreasing order.
inline std::vector<ColorWord> leq_I_covers(const Composition& shape, const ColorWord& c) {
  if (static_cast<std::size_t>(shape.size()) != c.size())
    throw std::invalid_argument("color word length differs from composition size");
  const auto flags = shape.descent_flags();
  std::vector<ColorWord> out;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const bool column = flags[i];
    if (column ? c[i - 1] < c[i] : c[i - 1] > c[i]) {
      ColorWord w = c;
      std::swap(w[i - 1], w[i]);
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All words strictly below c in <=_I (transitive closure of the covers).
inline std::vector<ColorWord> leq_I_below(const Composition& shape, const ColorWord& c) {
  std::vector<ColorWord> seen;
  std::vector<ColorWord> stack = leq_I_covers(shape, c);
  while (!stack.empty()) {
    ColorWord w = std::move(stack.back());
    stack.pop_back();
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
    for (auto& v : leq_I_covers(shape, w)) stack.push_back(std::move(v));
    seen.push_back(std::move(w));
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

/// c <=_I c' (reflexive).
inline bool leq_I(const Composition& shape, const ColorWord& c, const ColorWord& c_prime) {
  if (c == c_prime) return true;
  const auto below = leq_I_below(shape, c_prime);
  return std::binary_search(below.begin(), below.end(), c);
}

}  // namespace cycloribbon
