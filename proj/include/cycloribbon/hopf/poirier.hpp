#pragma once

#include <utility>
#include <vector>

#include "cycloribbon/combinatorics/permutation.hpp"
#include "cycloribbon/hopf/mantaci_reutenauer.hpp"

namespace cycloribbon {

/// Colored descent compositions of the shifted shuffle of the colored
/// permutations attached to two cycloribbons, after inversion. One entry per
/// shuffle word, so binomial(m+n, m) entries with repetition.
inline std::vector<ColoredRibbon> shuffle_descent_factors(
    const ColoredRibbon& a, const ColoredRibbon& b,
    ColorInversion mode = ColorInversion::Transport, int r = 0) {
  const auto ia = inverse_colored_perm(colored_permutation_of(a), mode, r);
  const auto ib = inverse_colored_perm(colored_permutation_of(b), mode, r);
  std::vector<ColoredRibbon> out;
  for (const auto& w : shifted_shuffle(ia, ib)) out.push_back(colored_descent_composition(w));
  std::sort(out.begin(), out.end(), CanonicalRibbonLess{});
  return out;
}

/// Product of the F basis of QMR, i.e. the class of an induction product of
/// simple modules.
inline LinearCombination qmr_product_F(const LinearCombination& a, const LinearCombination& b,
                                       ColorInversion mode = ColorInversion::Transport,
                                       int r = 0) {
  require_basis(a, Basis::QMR_F, "qmr_product_F");
  require_basis(b, Basis::QMR_F, "qmr_product_F");
  LinearCombination out(Basis::QMR_F);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      for (const auto& f : shuffle_descent_factors(to_ribbon(la), to_ribbon(lb), mode, r))
        out.add(to_label(f), ca * cb);
  return out;
}

/// The first k cells of a ribbon and the remaining ones.
inline std::pair<ColoredRibbon, ColoredRibbon> split_ribbon(const ColoredRibbon& ribbon, int k) {
  if (k < 0 || k > ribbon.size()) throw std::invalid_argument("split position out of range");
  std::vector<int> left, right;
  for (int d : ribbon.shape.descents()) {
    if (d < k) left.push_back(d);
    if (d > k) right.push_back(d - k);
  }
  const auto mid = ribbon.colors.begin() + k;
  return {ColoredRibbon(Composition::from_descents(k, left), ColorWord(ribbon.colors.begin(), mid)),
          ColoredRibbon(Composition::from_descents(ribbon.size() - k, right),
                        ColorWord(mid, ribbon.colors.end()))};
}

/// Deconcatenation coproduct of QMR: F_R splits at every cell boundary.
inline TensorCombination qmr_coproduct_F(const LinearCombination& a) {
  require_basis(a, Basis::QMR_F, "qmr_coproduct_F");
  TensorCombination out(Basis::QMR_F);
  for (const auto& [l, c] : a.terms()) {
    const auto ribbon = to_ribbon(l);
    for (int k = 0; k <= ribbon.size(); ++k) {
      auto [left, right] = split_ribbon(ribbon, k);
      out.add(to_label(left), to_label(right), c);
    }
  }
  return out;
}

/// The cycloribbon dual to R_(I,u): phi of its anticycloribbon.
inline ColoredRibbon dual_cycloribbon(const ColoredComposition& cc) {
  return phi(colored_comp_to_anticycloribbon(cc));
}

/// <R_(I,u), F_[J,d]> = 1 iff [J,d] is the dual cycloribbon of (I,u).
inline Rational duality_pairing(const LinearCombination& a, const LinearCombination& f) {
  require_basis(a, Basis::MR_R, "duality_pairing");
  require_basis(f, Basis::QMR_F, "duality_pairing");
  Rational total = 0;
  for (const auto& [l, c] : a.terms()) {
    const auto partner = to_label(dual_cycloribbon(to_colored_composition(l)));
    total += c * f.coefficient(partner);
  }
  return total;
}

/// Pairing of MR-R (x) MR-R against QMR-F (x) QMR-F, factor by factor.
inline Rational duality_pairing(const TensorCombination& a, const TensorCombination& f) {
  if (a.basis() != Basis::MR_R || f.basis() != Basis::QMR_F)
    throw std::invalid_argument("tensor pairing expects MR-R against QMR-F");
  Rational total = 0;
  for (const auto& [key, c] : a.terms()) {
    const auto left = to_label(dual_cycloribbon(to_colored_composition(key.first)));
    const auto right = to_label(dual_cycloribbon(to_colored_composition(key.second)));
    total += c * f.coefficient(left, right);
  }
  return total;
}

}  // namespace cycloribbon
