#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycloribbon/hopf/symmetric.hpp"

namespace cycloribbon {

/// Label of a simple module: a cycloribbon.
class SimpleLabel {
 public:
  SimpleLabel() = default;
  explicit SimpleLabel(ColoredRibbon ribbon) : ribbon_(std::move(ribbon)) {
    if (!ribbon_.is_cycloribbon()) throw std::invalid_argument("simple labels must be cycloribbons");
  }

  const ColoredRibbon& ribbon() const { return ribbon_; }
  int size() const { return ribbon_.size(); }

  auto operator<=>(const SimpleLabel&) const = default;

 private:
  ColoredRibbon ribbon_;
};

/// Label of an indecomposable projective module, stored as a colored
/// composition. Its anticycloribbon form and the cycloribbon of its simple
/// quotient are related by phi.
class ProjectiveLabel {
 public:
  ProjectiveLabel() = default;
  explicit ProjectiveLabel(ColoredComposition cc) : cc_(std::move(cc)) {}

  static ProjectiveLabel from_anticycloribbon(const ColoredRibbon& anti) {
    return ProjectiveLabel(anticycloribbon_to_colored_comp(anti));
  }

  const ColoredComposition& colored_composition() const { return cc_; }
  ColoredRibbon anticycloribbon() const { return colored_comp_to_anticycloribbon(cc_); }
  SimpleLabel simple_quotient() const { return SimpleLabel(phi(anticycloribbon())); }
  int size() const { return cc_.size(); }

  auto operator<=>(const ProjectiveLabel&) const = default;

 private:
  ColoredComposition cc_;
};

/// One-dimensional representation: xi_i acts by u_{xi[i]}, T_i by t[i] in {0, -1}.
struct Character {
  ColorWord xi;
  std::vector<int> t;

  auto operator<=>(const Character&) const = default;
};

inline std::vector<SimpleLabel> all_simples(int n, int r) {
  std::vector<SimpleLabel> out;
  for (auto& ribbon : enumerate_cycloribbons(n, r)) out.emplace_back(std::move(ribbon));
  return out;
}

inline std::vector<ProjectiveLabel> all_projectives(int n, int r) {
  std::vector<ProjectiveLabel> out;
  for (auto& cc : enumerate_colored_compositions(n, r)) out.emplace_back(std::move(cc));
  return out;
}

/// T_i acts by -1 exactly on the descents of phi(ribbon).
inline Character character_of_simple(const SimpleLabel& s) {
  const auto& ribbon = s.ribbon();
  const auto flags = phi(ribbon).shape.descent_flags();
  Character chi{ribbon.colors, {}};
  for (int i = 1; i < ribbon.size(); ++i) chi.t.push_back(flags[static_cast<std::size_t>(i)] ? -1 : 0);
  return chi;
}

/// Inverse of character_of_simple; throws if chi is not the character of a simple.
inline SimpleLabel simple_of_character(const Character& chi) {
  if (chi.t.size() + 1 != chi.xi.size() && !(chi.xi.empty() && chi.t.empty()))
    throw std::invalid_argument("character has inconsistent lengths");
  std::vector<int> d;
  for (std::size_t i = 0; i < chi.t.size(); ++i) {
    if (chi.t[i] != 0 && chi.t[i] != -1) throw std::invalid_argument("T eigenvalue must be 0 or -1");
    if (chi.t[i] == -1) d.push_back(static_cast<int>(i) + 1);
  }
  const ColoredRibbon anti(Composition::from_descents(static_cast<int>(chi.xi.size()), d), chi.xi);
  return SimpleLabel(phi(anti));
}

inline LinearCombination simple_class(const SimpleLabel& s) {
  return LinearCombination::term(Basis::QMR_F, to_label(s.ribbon()));
}

inline LinearCombination projective_class(const ProjectiveLabel& p) {
  return LinearCombination::term(Basis::MR_R, to_label(p.colored_composition()));
}

/// Composition factors of the induction product of two simples, as a sorted
/// multiset of size binomial(m+n, m).
inline std::vector<SimpleLabel> induce_simples(const SimpleLabel& a, const SimpleLabel& b,
                                               ColorInversion mode = ColorInversion::Transport,
                                               int r = 0) {
  std::vector<SimpleLabel> out;
  for (auto& ribbon : shuffle_descent_factors(a.ribbon(), b.ribbon(), mode, r))
    out.emplace_back(std::move(ribbon));
  std::sort(out.begin(), out.end(), [](const SimpleLabel& x, const SimpleLabel& y) {
    return CanonicalRibbonLess{}(x.ribbon(), y.ribbon());
  });
  return out;
}

/// Restriction to AKS_m (x) AKS_{n-m}: the single split of the ribbon at m.
inline std::pair<SimpleLabel, SimpleLabel> restrict_simple(const SimpleLabel& s, int m) {
  auto [left, right] = split_ribbon(s.ribbon(), m);
  return {SimpleLabel(std::move(left)), SimpleLabel(std::move(right))};
}

inline std::vector<ProjectiveLabel> induce_projectives(const ProjectiveLabel& a,
                                                       const ProjectiveLabel& b) {
  std::vector<ProjectiveLabel> out;
  const auto prod = mr_product_R(projective_class(a), projective_class(b));
  for (const auto& [l, c] : prod.terms()) {
    if (!is_integer(c) || c < 0) throw std::logic_error("non-positive projective multiplicity");
    for (Integer k = 0; k < c.get_num(); ++k) out.emplace_back(to_colored_composition(l));
  }
  return out;
}

/// Dimension of P: sum over the NCSF ribbons of its restriction of the
/// corresponding descent class sizes.
inline Integer dim_projective(const ProjectiveLabel& p) {
  Integer dim = 0;
  const auto restricted = pi_restriction(projective_class(p));
  for (const auto& [l, c] : restricted.terms()) {
    if (!is_integer(c)) throw std::logic_error("non-integral restriction coefficient");
    dim += c.get_num() * descent_class_size(Composition(l.parts));
  }
  return dim;
}

/// Summands of the module induced from the projective H_n(0)-module P_I:
/// one per anticycloribbon of shape I.
inline std::vector<std::pair<ProjectiveLabel, Integer>> induce_hecke_projective(
    const Composition& shape, int r) {
  std::vector<std::pair<ProjectiveLabel, Integer>> out;
  for (const auto& anti : enumerate_anticycloribbons(shape.size(), r, &shape)) {
    auto p = ProjectiveLabel::from_anticycloribbon(anti);
    auto dim = dim_projective(p);
    out.emplace_back(std::move(p), std::move(dim));
  }
  return out;
}

}  // namespace cycloribbon
