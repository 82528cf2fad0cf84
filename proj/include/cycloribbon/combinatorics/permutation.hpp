#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cycloribbon/combinatorics/composition.hpp"
#include "cycloribbon/rational.hpp"

namespace cycloribbon {

/// Permutation word of {1, ..., n} with one color per position.
struct ColoredPermutation {
  std::vector<int> word;
  ColorWord colors;

  ColoredPermutation() = default;
  ColoredPermutation(std::vector<int> w, ColorWord c) : word(std::move(w)), colors(std::move(c)) {
    if (word.size() != colors.size())
      throw std::invalid_argument("colored permutation needs one color per position");
    std::vector<bool> seen(word.size() + 1, false);
    for (int x : word) {
      if (x < 1 || static_cast<std::size_t>(x) > word.size() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("word is not a permutation of {1,...,n}");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  int size() const { return static_cast<int>(word.size()); }

  auto operator<=>(const ColoredPermutation&) const = default;
};

/// How colors travel when a colored permutation is inverted.
enum class ColorInversion {
  /// The color sitting at the position of value j becomes the color of position j.
  Transport,
  /// Same, then c -> -c in Z/r (colors 1..r standing for 0..r-1).
  Negate,
};

inline Composition descent_composition(const std::vector<int>& word) {
  std::vector<int> d;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] > word[i]) d.push_back(static_cast<int>(i));
  return Composition::from_descents(static_cast<int>(word.size()), d);
}

inline int inversions(const std::vector<int>& word) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) count += word[i] > word[j];
  return count;
}

/// Longest permutation whose descent composition is I: increasing blocks of
/// sizes i_1, i_2, ..., the first block holding the largest values.
inline std::vector<int> max_inversion_perm(const Composition& shape) {
  std::vector<int> word;
  int top = shape.size();
  for (int part : shape.parts()) {
    const int low = top - part + 1;
    for (int v = low; v <= top; ++v) word.push_back(v);
    top = low - 1;
  }
  return word;
}

inline std::vector<int> inverse_word(const std::vector<int>& word) {
  std::vector<int> inv(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    inv[static_cast<std::size_t>(word[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

inline ColoredPermutation inverse_colored_perm(const ColoredPermutation& p,
                                               ColorInversion mode = ColorInversion::Transport,
                                               int r = 0) {
  auto inv = inverse_word(p.word);
  ColorWord colors(p.colors.size());
  for (std::size_t j = 0; j < inv.size(); ++j)
    colors[j] = p.colors[static_cast<std::size_t>(inv[j] - 1)];
  if (mode == ColorInversion::Negate) {
    if (r < 1) throw std::invalid_argument("color negation needs the number of colors");
    for (auto& c : colors) c = (r - (c - 1)) % r + 1;
  }
  return {std::move(inv), std::move(colors)};
}

/// Interleavings of a and b (letters of b shifted by |a|), each letter keeping
/// the color it carried. Sorted by word.
inline std::vector<ColoredPermutation> shifted_shuffle(const ColoredPermutation& a,
                                                       const ColoredPermutation& b) {
  const std::size_t m = a.word.size(), n = b.word.size();
  std::vector<ColoredPermutation> out;
  std::vector<int> word(m + n);
  ColorWord colors(m + n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    const std::size_t k = i + j;
    if (k == m + n) {
      out.emplace_back(word, colors);
      return;
    }
    if (i < m) {
      word[k] = a.word[i];
      colors[k] = a.colors[i];
      rec(i + 1, j);
    }
    if (j < n) {
      word[k] = b.word[j] + static_cast<int>(m);
      colors[k] = b.colors[j];
      rec(i, j + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Position i is a descent iff the color strictly drops, or the colors agree
/// and the letter drops. The result is always a cycloribbon.
inline ColoredRibbon colored_descent_composition(const ColoredPermutation& p) {
  std::vector<int> d;
  for (std::size_t i = 1; i < p.word.size(); ++i) {
    const Color a = p.colors[i - 1], b = p.colors[i];
    if (a > b || (a == b && p.word[i - 1] > p.word[i])) d.push_back(static_cast<int>(i));
  }
  return {Composition::from_descents(p.size(), d), p.colors};
}

/// The colored permutation attached to a cycloribbon [I, c]: its inverse is
/// the longest permutation of descent class I, carrying c position by position.
inline ColoredPermutation colored_permutation_of(const ColoredRibbon& ribbon) {
  ColoredPermutation longest(max_inversion_perm(ribbon.shape), ribbon.colors);
  return inverse_colored_perm(longest, ColorInversion::Transport);
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

inline Integer multinomial(const std::vector<int>& parts) {
  Integer m = 1;
  int total = 0;
  for (int p : parts) {
    total += p;
    m *= binomial(total, p);
  }
  return m;
}

/// #{sigma : C(sigma) = I}, by inclusion-exclusion over coarsenings of I.
inline Integer descent_class_size(const Composition& shape) {
  const int n = shape.size();
  const auto d = shape.descents();
  const std::size_t k = d.size();
  Integer total = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
    std::vector<int> kept;
    for (std::size_t b = 0; b < k; ++b)
      if (subset >> b & 1U) kept.push_back(d[b]);
    const Integer term = multinomial(Composition::from_descents(n, kept).parts());
    if ((k - kept.size()) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace cycloribbon
