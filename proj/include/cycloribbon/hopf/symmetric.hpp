#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cycloribbon/hopf/poirier.hpp"

namespace cycloribbon {

using Partition = std::vector<int>;

/// r-tuple of partitions (lambda^(1), ..., lambda^(r)).
struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {
    for (const auto& p : components) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && p[k - 1] < p[k])
          throw std::invalid_argument("partition parts must be non-increasing");
      }
    }
  }

  int size() const {
    int n = 0;
    for (const auto& p : components) n += std::accumulate(p.begin(), p.end(), 0);
    return n;
  }

  auto operator<=>(const Multipartition&) const = default;
};

/// Partitions of n, lexicographically increasing as part vectors.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Multipartitions of n with r components: by the tuple of component sizes,
/// then componentwise lexicographic.
inline std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
  if (r < 1 || n < 0) throw std::invalid_argument("multipartitions need n >= 0 and r >= 1");
  std::vector<std::vector<int>> size_tuples;
  std::vector<int> sizes(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == sizes.size()) {
      sizes[k] = remaining;
      size_tuples.push_back(sizes);
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      sizes[k] = s;
      self(self, k + 1, remaining - s);
    }
  };
  rec(rec, 0, n);
  std::sort(size_tuples.begin(), size_tuples.end());
  std::vector<Multipartition> out;
  for (const auto& t : size_tuples) {
    std::vector<Partition> comp;
    auto fill = [&](auto&& self, std::size_t k) -> void {
      if (k == t.size()) {
        out.emplace_back(comp);
        return;
      }
      for (const auto& p : partitions_of(t[k])) {
        comp.push_back(p);
        self(self, k + 1);
        comp.pop_back();
      }
    };
    fill(fill, 0);
  }
  return out;
}

inline Label to_label(const Multipartition& mp) {
  Label l;
  for (std::size_t k = 0; k < mp.components.size(); ++k)
    for (int p : mp.components[k]) {
      l.parts.push_back(p);
      l.colors.push_back(static_cast<int>(k) + 1);
    }
  return l;
}

/// Product of commutative h-monomials.
inline LinearCombination sym_product_h(const LinearCombination& a, const LinearCombination& b) {
  require_basis(a, Basis::SYM_h, "sym_product_h");
  require_basis(b, Basis::SYM_h, "sym_product_h");
  LinearCombination out(Basis::SYM_h);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      out.add_unchecked(canonical_h_monomial(detail::concat_labels(la, lb)), ca * cb);
  return out;
}

/// e: S_j^(i) -> h_j(X_i), extended multiplicatively; R labels go through S.
inline LinearCombination e_map(const LinearCombination& a) {
  if (a.basis() == Basis::MR_R) return e_map(R_to_S(a));
  require_basis(a, Basis::MR_S, "e_map");
  LinearCombination out(Basis::SYM_h);
  for (const auto& [l, c] : a.terms()) out.add_unchecked(canonical_h_monomial(l), c);
  return out;
}

/// F_[(j), i^j], the image of h_j(X_i) under d.
inline LinearCombination d_generator(int degree, Color color) {
  return LinearCombination::term(
      Basis::QMR_F, Label{{degree}, std::vector<int>(static_cast<std::size_t>(degree), color)});
}

/// d of one monomial, multiplying the factor images in the given order.
inline LinearCombination d_of_factors(const Label& monomial) {
  LinearCombination acc = LinearCombination::unit(Basis::QMR_F);
  for (std::size_t k = 0; k < monomial.parts.size(); ++k)
    acc = qmr_product_F(acc, d_generator(monomial.parts[k], monomial.colors[k]));
  return acc;
}

/// d: h_j(X_i) -> F_[(j), i^j], an algebra morphism into QMR.
inline LinearCombination d_map(const LinearCombination& a) {
  require_basis(a, Basis::SYM_h, "d_map");
  return apply_linear(a, Basis::QMR_F, [](const Label& l) { return d_of_factors(l); });
}

/// The Cartan map c = d o e.
inline LinearCombination cartan_map(const LinearCombination& a) { return d_map(e_map(a)); }

/// Jacobi-Trudi: s_lambda(X_color) = det(h_{lambda_i - i + j}).
inline LinearCombination schur_in_h(const Partition& lambda, Color color = 1) {
  const auto l = lambda.size();
  LinearCombination out(Basis::SYM_h);
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Label mono;
    bool vanishes = false;
    for (std::size_t i = 0; i < l && !vanishes; ++i) {
      const int degree = lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
      if (degree < 0) vanishes = true;
      if (degree > 0) {
        mono.parts.push_back(degree);
        mono.colors.push_back(color);
      }
    }
    if (vanishes) continue;
    int inv = 0;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) inv += perm[i] > perm[j];
    out.add_unchecked(canonical_h_monomial(mono), inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// s_{lambda^(1)}(X_1) ... s_{lambda^(r)}(X_r) in the h basis.
inline LinearCombination multipartition_class(const Multipartition& mp) {
  LinearCombination acc = LinearCombination::unit(Basis::SYM_h);
  for (std::size_t k = 0; k < mp.components.size(); ++k)
    acc = sym_product_h(acc, schur_in_h(mp.components[k], static_cast<Color>(k) + 1));
  return acc;
}

/// Commutative h-monomials of degree n over r colors, in label order.
inline std::vector<Label> h_monomials(int n, int r) {
  std::vector<Label> out;
  for (const auto& mp : enumerate_multipartitions(n, r)) out.push_back(canonical_h_monomial(to_label(mp)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cycloribbon
