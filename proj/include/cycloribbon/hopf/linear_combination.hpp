#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycloribbon/combinatorics/composition.hpp"
#include "cycloribbon/rational.hpp"

namespace cycloribbon {

/// Which graded basis a combination is written in.
enum class Basis {
  MR_S,    ///< complete basis S^(I,u) of the Mantaci-Reutenauer algebra
  MR_R,    ///< colored ribbon basis R_(I,u)
  QMR_F,   ///< fundamental basis F_[I,c], labels are cycloribbons
  SYM_h,   ///< commutative monomials in h_j(X_i)
  SYM_s,   ///< products of Schur functions s_lambda(X_i)
  NCSF_R,  ///< ordinary noncommutative ribbon basis
};

inline std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::MR_S: return "MR-S";
    case Basis::MR_R: return "MR-R";
    case Basis::QMR_F: return "QMR-F";
    case Basis::SYM_h: return "SYM-h";
    case Basis::SYM_s: return "SYM-s";
    case Basis::NCSF_R: return "NCSF-R";
  }
  return "?";
}

inline Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::MR_S, Basis::MR_R, Basis::QMR_F, Basis::SYM_h, Basis::SYM_s,
                  Basis::NCSF_R})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

/// Uniform basis label: a list of parts and a list of colors.
///  - MR-S / MR-R: colored composition (one color per part)
///  - QMR-F: colored ribbon (one color per cell)
///  - SYM-h: h_{parts[k]}(X_{colors[k]}), sorted by (color, degree)
///  - SYM-s: multipartition, colors[k] is the component of parts[k]
///  - NCSF-R: composition, no colors
struct Label {
  std::vector<int> parts;
  std::vector<int> colors;

  int grade() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Label&) const = default;
};

inline Label to_label(const ColoredComposition& cc) { return {cc.parts.parts(), cc.part_colors}; }
inline Label to_label(const ColoredRibbon& r) { return {r.shape.parts(), r.colors}; }
inline Label to_label(const Composition& c) { return {c.parts(), {}}; }

inline ColoredComposition to_colored_composition(const Label& l) {
  return {Composition(l.parts), l.colors};
}
inline ColoredRibbon to_ribbon(const Label& l) { return {Composition(l.parts), l.colors}; }

/// Sorts the factors of a commutative h-monomial into canonical order.
inline Label canonical_h_monomial(const Label& l) {
  std::vector<std::pair<int, int>> factors;
  for (std::size_t k = 0; k < l.parts.size(); ++k) factors.emplace_back(l.colors[k], l.parts[k]);
  std::sort(factors.begin(), factors.end());
  Label out;
  for (auto [c, d] : factors) {
    out.parts.push_back(d);
    out.colors.push_back(c);
  }
  return out;
}

/// Throws if l is not a well-formed label of basis b.
inline void validate_label(Basis b, const Label& l) {
  for (int p : l.parts)
    if (p < 1) throw std::invalid_argument("label parts must be positive");
  for (int c : l.colors)
    if (c < 1) throw std::invalid_argument("label colors must be positive");
  switch (b) {
    case Basis::MR_S:
    case Basis::MR_R:
      if (l.colors.size() != l.parts.size())
        throw std::invalid_argument("colored composition needs one color per part");
      break;
    case Basis::QMR_F:
      if (static_cast<std::size_t>(l.grade()) != l.colors.size())
        throw std::invalid_argument("ribbon needs one color per cell");
      if (!to_ribbon(l).is_cycloribbon())
        throw std::invalid_argument("QMR-F labels must be cycloribbons");
      break;
    case Basis::SYM_h:
      if (l.colors.size() != l.parts.size())
        throw std::invalid_argument("h-monomial needs one color per factor");
      if (canonical_h_monomial(l) != l)
        throw std::invalid_argument("h-monomial factors must be sorted by (color, degree)");
      break;
    case Basis::SYM_s:
      if (l.colors.size() != l.parts.size())
        throw std::invalid_argument("multipartition needs one component index per part");
      for (std::size_t k = 1; k < l.parts.size(); ++k) {
        if (l.colors[k - 1] > l.colors[k] ||
            (l.colors[k - 1] == l.colors[k] && l.parts[k - 1] < l.parts[k]))
          throw std::invalid_argument("multipartition parts must be grouped and non-increasing");
      }
      break;
    case Basis::NCSF_R:
      if (!l.colors.empty()) throw std::invalid_argument("NCSF labels carry no colors");
      break;
  }
}

/// Finite formal sum of labels of one basis with exact rational coefficients.
/// Zero coefficients are never stored.
class LinearCombination {
 public:
  using Terms = std::map<Label, Rational>;

  explicit LinearCombination(Basis basis) : basis_(basis) {}

  static LinearCombination term(Basis basis, Label label, const Rational& coeff = 1) {
    LinearCombination lc(basis);
    lc.add(std::move(label), coeff);
    return lc;
  }

  static LinearCombination unit(Basis basis) { return term(basis, Label{}); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(Label label, const Rational& coeff) {
    if (coeff == 0) return;
    validate_label(basis_, label);
    add_unchecked(std::move(label), coeff);
  }

  /// Caller guarantees the label is well formed for this basis.
  void add_unchecked(Label label, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(label), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    require_same_basis(o);
    for (const auto& [l, c] : o.terms_) add_unchecked(l, c);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& o) {
    require_same_basis(o);
    for (const auto& [l, c] : o.terms_) add_unchecked(l, -c);
    return *this;
  }

  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [l, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

  /// Grade if homogeneous, -1 if zero; throws if mixed.
  int grade() const {
    if (terms_.empty()) return -1;
    const int g = terms_.begin()->first.grade();
    for (const auto& [l, c] : terms_)
      if (l.grade() != g) throw std::logic_error("combination is not homogeneous");
    return g;
  }

  bool has_integer_coefficients() const {
    for (const auto& [l, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  Rational coefficient_sum() const {
    Rational s = 0;
    for (const auto& [l, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  void require_same_basis(const LinearCombination& o) const {
    if (o.basis_ != basis_)
      throw std::invalid_argument("mixing bases " + std::string(basis_name(basis_)) + " and " +
                                  std::string(basis_name(o.basis_)));
  }

 private:
  Basis basis_;
  Terms terms_;
};

/// Element of A (x) A, both factors in the same basis.
class TensorCombination {
 public:
  using Key = std::pair<Label, Label>;
  using Terms = std::map<Key, Rational>;

  explicit TensorCombination(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Label left, Label right, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{std::move(left), std::move(right)}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Label& l, const Label& r) const {
    auto it = terms_.find(Key{l, r});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  TensorCombination& operator+=(const TensorCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }

  TensorCombination& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  static TensorCombination tensor(const LinearCombination& a, const LinearCombination& b) {
    a.require_same_basis(b);
    TensorCombination t(a.basis());
    for (const auto& [la, ca] : a.terms())
      for (const auto& [lb, cb] : b.terms()) t.add(la, lb, ca * cb);
    return t;
  }

  friend bool operator==(const TensorCombination& a, const TensorCombination& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  Basis basis_;
  Terms terms_;
};

/// Applies f to every term (label -> combination) and sums the results.
template <class F>
LinearCombination apply_linear(const LinearCombination& a, Basis target, F&& f) {
  LinearCombination out(target);
  for (const auto& [l, c] : a.terms()) {
    LinearCombination img = f(l);
    img *= c;
    out += img;
  }
  return out;
}

/// Bilinear extension of f over pairs of labels.
template <class F>
LinearCombination apply_bilinear(const LinearCombination& a, const LinearCombination& b,
                                 Basis target, F&& f) {
  LinearCombination out(target);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      LinearCombination img = f(la, lb);
      img *= ca * cb;
      out += img;
    }
  return out;
}

}  // namespace cycloribbon
