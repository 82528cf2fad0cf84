#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cycloribbon/hopf/linear_combination.hpp"

namespace cycloribbon {

/// Colored compositions obtained by adding up groups of consecutive parts of
/// the same color, cc itself included. Each same-color boundary is merged or
/// kept independently.
inline std::vector<ColoredComposition> anti_refinements(const ColoredComposition& cc) {
  const auto& parts = cc.parts.parts();
  std::vector<std::size_t> mergeable;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    if (cc.part_colors[k] == cc.part_colors[k + 1]) mergeable.push_back(k);
  std::vector<ColoredComposition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mergeable.size()); ++mask) {
    std::vector<bool> merge(parts.size(), false);
    for (std::size_t b = 0; b < mergeable.size(); ++b)
      if (mask >> b & 1U) merge[mergeable[b]] = true;
    std::vector<int> p;
    ColorWord c;
    int acc = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      acc += parts[k];
      if (!merge[k]) {
        p.push_back(acc);
        c.push_back(cc.part_colors[k]);
        acc = 0;
      }
    }
    out.emplace_back(Composition(std::move(p)), std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline Label concat_labels(const Label& a, const Label& b) {
  Label out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  out.colors.insert(out.colors.end(), b.colors.begin(), b.colors.end());
  return out;
}

/// R_x R_y = R_{x.y} + R_{x|>y} when the last color of x equals the first of y.
/// Uncolored labels (NCSF) always glue.
inline void ribbon_product_terms(const Label& a, const Label& b, LinearCombination& out,
                                 const Rational& coeff) {
  out.add_unchecked(concat_labels(a, b), coeff);
  if (a.empty() || b.empty()) return;
  const bool colored = !a.colors.empty();
  if (colored && a.colors.back() != b.colors.front()) return;
  Label glued = a;
  glued.parts.back() += b.parts.front();
  glued.parts.insert(glued.parts.end(), b.parts.begin() + 1, b.parts.end());
  if (colored) glued.colors.insert(glued.colors.end(), b.colors.begin() + 1, b.colors.end());
  out.add_unchecked(std::move(glued), coeff);
}

}  // namespace detail

inline void require_basis(const LinearCombination& a, Basis b, const char* op) {
  if (a.basis() != b)
    throw std::invalid_argument(std::string(op) + " expects basis " + std::string(basis_name(b)) +
                                ", got " + std::string(basis_name(a.basis())));
}

/// Product in the free algebra on S_j^(i): concatenation of labels.
inline LinearCombination mr_product_S(const LinearCombination& a, const LinearCombination& b) {
  require_basis(a, Basis::MR_S, "mr_product_S");
  require_basis(b, Basis::MR_S, "mr_product_S");
  LinearCombination out(Basis::MR_S);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) out.add_unchecked(detail::concat_labels(la, lb), ca * cb);
  return out;
}

inline LinearCombination mr_product_R(const LinearCombination& a, const LinearCombination& b) {
  require_basis(a, Basis::MR_R, "mr_product_R");
  require_basis(b, Basis::MR_R, "mr_product_R");
  LinearCombination out(Basis::MR_R);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) detail::ribbon_product_terms(la, lb, out, ca * cb);
  return out;
}

/// Ordinary noncommutative ribbon product R_I R_J = R_{I.J} + R_{I|>J}.
inline LinearCombination ncsf_product_R(const LinearCombination& a, const LinearCombination& b) {
  require_basis(a, Basis::NCSF_R, "ncsf_product_R");
  require_basis(b, Basis::NCSF_R, "ncsf_product_R");
  LinearCombination out(Basis::NCSF_R);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) detail::ribbon_product_terms(la, lb, out, ca * cb);
  return out;
}

/// S^(I,u) = sum of R over the anti-refinements of (I,u).
inline LinearCombination S_to_R(const LinearCombination& a) {
  require_basis(a, Basis::MR_S, "S_to_R");
  LinearCombination out(Basis::MR_R);
  for (const auto& [l, c] : a.terms())
    for (const auto& coarser : anti_refinements(to_colored_composition(l)))
      out.add_unchecked(to_label(coarser), c);
  return out;
}

/// Moebius inversion over the anti-refinement order; the interval below a
/// label is boolean, so the sign is (-1)^(length difference).
inline LinearCombination R_to_S(const LinearCombination& a) {
  require_basis(a, Basis::MR_R, "R_to_S");
  LinearCombination out(Basis::MR_S);
  for (const auto& [l, c] : a.terms()) {
    for (const auto& coarser : anti_refinements(to_colored_composition(l))) {
      const auto diff = l.parts.size() - coarser.length();
      out.add_unchecked(to_label(coarser), diff % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

/// Ordinary NCSF analogue of S_to_R: S^I is the sum of R_J over all coarsenings J.
inline LinearCombination ncsf_S_to_R(const Composition& shape, const Rational& coeff = 1) {
  ColorWord mono(shape.length(), 1);
  LinearCombination out(Basis::NCSF_R);
  for (const auto& coarser : anti_refinements(ColoredComposition(shape, mono)))
    out.add_unchecked(to_label(coarser.parts), coeff);
  return out;
}

namespace detail {

/// Delta S^(I,u): every part j of color k splits as a + b = j, the nonzero
/// pieces going left and right with color k.
inline void coproduct_S_label(const Label& l, TensorCombination& out, const Rational& coeff) {
  const std::size_t p = l.parts.size();
  std::vector<int> split(p, 0);
  for (;;) {
    Label left, right;
    for (std::size_t k = 0; k < p; ++k) {
      const int a = split[k], b = l.parts[k] - split[k];
      if (a > 0) {
        left.parts.push_back(a);
        left.colors.push_back(l.colors[k]);
      }
      if (b > 0) {
        right.parts.push_back(b);
        right.colors.push_back(l.colors[k]);
      }
    }
    out.add(std::move(left), std::move(right), coeff);
    std::size_t k = 0;
    while (k < p && split[k] == l.parts[k]) split[k++] = 0;
    if (k == p) break;
    ++split[k];
  }
}

}  // namespace detail

/// Coproduct of MR in either basis; the R case goes through S.
inline TensorCombination mr_coproduct(const LinearCombination& a) {
  if (a.basis() == Basis::MR_S) {
    TensorCombination out(Basis::MR_S);
    for (const auto& [l, c] : a.terms()) detail::coproduct_S_label(l, out, c);
    return out;
  }
  require_basis(a, Basis::MR_R, "mr_coproduct");
  const TensorCombination in_s = mr_coproduct(R_to_S(a));
  TensorCombination out(Basis::MR_R);
  for (const auto& [key, c] : in_s.terms()) {
    const auto left = S_to_R(LinearCombination::term(Basis::MR_S, key.first));
    const auto right = S_to_R(LinearCombination::term(Basis::MR_S, key.second));
    for (const auto& [ll, lc] : left.terms())
      for (const auto& [rl, rc] : right.terms()) out.add(ll, rl, c * lc * rc);
  }
  return out;
}

/// Componentwise product in MR (x) MR, in the S or R basis.
inline TensorCombination mr_tensor_product(const TensorCombination& x, const TensorCombination& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("tensor factors in different bases");
  TensorCombination out(x.basis());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const auto mul = [&](const Label& p, const Label& q) {
        const auto lp = LinearCombination::term(x.basis(), p);
        const auto lq = LinearCombination::term(x.basis(), q);
        return x.basis() == Basis::MR_S ? mr_product_S(lp, lq) : mr_product_R(lp, lq);
      };
      const auto left = mul(kx.first, ky.first);
      const auto right = mul(kx.second, ky.second);
      for (const auto& [ll, lc] : left.terms())
        for (const auto& [rl, rc] : right.terms()) out.add(ll, rl, cx * cy * lc * rc);
    }
  return out;
}

/// Restriction to the 0-Hecke algebra, S_j^(i) -> S_j, landing in the NCSF
/// ribbon basis. R labels are cut into maximal same-color blocks, each block
/// becomes an ordinary ribbon, and the blocks are multiplied.
inline LinearCombination pi_restriction(const LinearCombination& a) {
  LinearCombination out(Basis::NCSF_R);
  if (a.basis() == Basis::MR_S) {
    for (const auto& [l, c] : a.terms()) out += ncsf_S_to_R(Composition(l.parts), c);
    return out;
  }
  require_basis(a, Basis::MR_R, "pi_restriction");
  for (const auto& [l, c] : a.terms()) {
    LinearCombination acc = LinearCombination::unit(Basis::NCSF_R);
    std::size_t k = 0;
    while (k < l.parts.size()) {
      Label block;
      const int color = l.colors[k];
      while (k < l.parts.size() && l.colors[k] == color) block.parts.push_back(l.parts[k++]);
      acc = ncsf_product_R(acc, LinearCombination::term(Basis::NCSF_R, block));
    }
    acc *= c;
    out += acc;
  }
  return out;
}

}  // namespace cycloribbon
