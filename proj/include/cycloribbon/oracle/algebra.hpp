#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloribbon/combinatorics/composition.hpp"
#include "cycloribbon/oracle/linalg.hpp"

namespace cycloribbon::oracle {

using Permutation = std::vector<int>;

struct AlgebraParams {
  int n = 1;
  int r = 1;
  std::vector<Rational> u;

  AlgebraParams() = default;
  AlgebraParams(int n_, int r_, std::vector<Rational> u_ = {}) : n(n_), r(r_), u(std::move(u_)) {
    if (n < 1 || r < 1) throw std::invalid_argument("algebra needs n >= 1 and r >= 1");
    if (u.empty())
      for (int k = 1; k <= r; ++k) u.emplace_back(k);
    if (u.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("need exactly r parameters");
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = a + 1; b < u.size(); ++b)
        if (u[a] == u[b]) throw std::invalid_argument("parameters u must be pairwise distinct");
  }

  const Rational& param(Color c) const { return u.at(static_cast<std::size_t>(c - 1)); }
};

/// u_k = k^2 - k + 1: 1, 3, 7, 13, ...
inline std::vector<Rational> alternate_parameters(int r) {
  std::vector<Rational> u;
  for (int k = 1; k <= r; ++k) u.emplace_back(k * k - k + 1);
  return u;
}

inline std::string describe(const AlgebraParams& p) {
  std::string s = "n=" + std::to_string(p.n) + ",r=" + std::to_string(p.r) + ",u=";
  for (std::size_t k = 0; k < p.u.size(); ++k) {
    if (k) s += ',';
    s += to_string(p.u[k]);
  }
  return s;
}

/// Basis bookkeeping for B_{c,sigma} = L_c T_sigma: index = color index * n! + permutation index.
class AKSAlgebra {
 public:
  explicit AKSAlgebra(AlgebraParams params) : params_(std::move(params)) {
    const int n = params_.n;
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      perm_index_.emplace(p, perms_.size());
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    num_colors_ = 1;
    for (int k = 0; k < n; ++k) {
      if (num_colors_ > (std::size_t{1} << 40) / static_cast<std::size_t>(params_.r))
        throw std::invalid_argument("algebra too large");
      num_colors_ *= static_cast<std::size_t>(params_.r);
    }

    const std::size_t nf = perms_.size();
    left_.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(nf));
    left_up_.assign(static_cast<std::size_t>(n), std::vector<bool>(nf));
    right_.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(nf));
    right_up_.assign(static_cast<std::size_t>(n), std::vector<bool>(nf));
    reduced_words_.resize(nf);
    for (std::size_t k = 0; k < nf; ++k) {
      const auto& w = perms_[k];
      for (int i = 1; i < n; ++i) {
        // s_i sigma exchanges the values i and i+1.
        Permutation l = w;
        for (auto& x : l) x = x == i ? i + 1 : x == i + 1 ? i : x;
        left_[i][k] = perm_index_.at(l);
        left_up_[i][k] = std::find(w.begin(), w.end(), i) < std::find(w.begin(), w.end(), i + 1);
        // sigma s_i exchanges the positions i and i+1.
        Permutation rr = w;
        std::swap(rr[i - 1], rr[i]);
        right_[i][k] = perm_index_.at(rr);
        right_up_[i][k] = w[i - 1] < w[i];
      }
    }
    for (std::size_t k = 0; k < nf; ++k) {
      Permutation w = perms_[k];
      std::vector<int> word;
      for (;;) {
        int j = 0;
        for (int i = 1; i < n && j == 0; ++i)
          if (w[i - 1] > w[i]) j = i;
        if (j == 0) break;
        std::swap(w[j - 1], w[j]);
        word.push_back(j);
      }
      std::reverse(word.begin(), word.end());
      reduced_words_[k] = std::move(word);
    }
  }

  const AlgebraParams& params() const { return params_; }
  int n() const { return params_.n; }
  int r() const { return params_.r; }
  std::size_t num_permutations() const { return perms_.size(); }
  std::size_t num_color_words() const { return num_colors_; }
  std::size_t dimension() const { return perms_.size() * num_colors_; }

  std::size_t index(std::size_t color_index, std::size_t perm_index) const {
    return color_index * perms_.size() + perm_index;
  }
  std::size_t color_part(std::size_t idx) const { return idx / perms_.size(); }
  std::size_t perm_part(std::size_t idx) const { return idx % perms_.size(); }

  const Permutation& permutation(std::size_t perm_index) const { return perms_.at(perm_index); }
  std::size_t permutation_index(const Permutation& p) const {
    const auto it = perm_index_.find(p);
    if (it == perm_index_.end()) throw std::invalid_argument("not a permutation of the right size");
    return it->second;
  }
  std::size_t identity_index() const { return 0; }

  ColorWord color_word(std::size_t color_index) const {
    ColorWord c(static_cast<std::size_t>(n()));
    for (int k = n() - 1; k >= 0; --k) {
      c[static_cast<std::size_t>(k)] = static_cast<int>(color_index % static_cast<std::size_t>(r())) + 1;
      color_index /= static_cast<std::size_t>(r());
    }
    return c;
  }
  std::size_t color_index(const ColorWord& c) const {
    if (c.size() != static_cast<std::size_t>(n())) throw std::invalid_argument("color word has wrong length");
    std::size_t idx = 0;
    for (int x : c) {
      if (x < 1 || x > r()) throw std::invalid_argument("color out of range");
      idx = idx * static_cast<std::size_t>(r()) + static_cast<std::size_t>(x - 1);
    }
    return idx;
  }
  /// Color c_j (1-based j) of the color word with the given index.
  int color_at(std::size_t color_index, int j) const {
    std::size_t stride = 1;
    for (int k = n(); k > j; --k) stride *= static_cast<std::size_t>(r());
    return static_cast<int>((color_index / stride) % static_cast<std::size_t>(r())) + 1;
  }
  std::size_t swap_colors(std::size_t color_index, int i) const {
    std::size_t stride = 1;
    for (int k = n(); k > i + 1; --k) stride *= static_cast<std::size_t>(r());
    const std::size_t R = static_cast<std::size_t>(r());
    const std::size_t b = (color_index / stride) % R;
    const std::size_t a = (color_index / (stride * R)) % R;
    return color_index - a * stride * R - b * stride + b * stride * R + a * stride;
  }

  std::size_t left_s(int i, std::size_t perm_index) const { return left_[i][perm_index]; }
  bool left_s_increases(int i, std::size_t perm_index) const { return left_up_[i][perm_index]; }
  std::size_t right_s(int i, std::size_t perm_index) const { return right_[i][perm_index]; }
  bool right_s_increases(int i, std::size_t perm_index) const { return right_up_[i][perm_index]; }
  /// sigma = s_{w1} ... s_{wk}, reduced.
  const std::vector<int>& reduced_word(std::size_t perm_index) const { return reduced_words_[perm_index]; }

 private:
  AlgebraParams params_;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::size_t> perm_index_;
  std::size_t num_colors_ = 1;
  std::vector<std::vector<std::size_t>> left_, right_;
  std::vector<std::vector<bool>> left_up_, right_up_;
  std::vector<std::vector<int>> reduced_words_;
};

using AlgebraPtr = std::shared_ptr<const AKSAlgebra>;

inline AlgebraPtr make_algebra(AlgebraParams params) {
  return std::make_shared<const AKSAlgebra>(std::move(params));
}

/// Element of the algebra as a sparse combination of the B_{c,sigma}.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraPtr alg, SparseVector terms = {})
      : alg_(std::move(alg)), terms_(std::move(terms)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const SparseVector& terms() const { return terms_; }
  SparseVector& terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ColorWord& c, const Permutation& p) const {
    const auto it = terms_.find(alg_->index(alg_->color_index(c), alg_->permutation_index(p)));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(std::size_t idx, const Rational& a) {
    if (a == 0) return;
    auto [it, ins] = terms_.try_emplace(idx, 0);
    it->second += a;
    if (it->second == 0) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    same_algebra(o);
    axpy(terms_, 1, o.terms_);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    same_algebra(o);
    axpy(terms_, -1, o.terms_);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& a) {
    if (a == 0) terms_.clear();
    for (auto& [k, v] : terms_) v *= a;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

 private:
  void same_algebra(const AlgebraElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("elements of different algebras");
  }

  AlgebraPtr alg_;
  SparseVector terms_;
};

/// T_i L_c T_sigma = L_{c s_i} T_i T_sigma + {-L_c T_sigma if c_i < c_{i+1};
/// 0 if equal; L_{c s_i} T_sigma if c_i > c_{i+1}}, with T_i T_sigma =
/// T_{s_i sigma} when the length goes up and -T_sigma otherwise.
inline AlgebraElement left_mult_T(int i, const AlgebraElement& x) {
  const auto& A = *x.algebra();
  if (i < 1 || i >= A.n()) throw std::out_of_range("T index out of range");
  AlgebraElement out(x.algebra());
  for (const auto& [idx, a] : x.terms()) {
    const std::size_t c = A.color_part(idx), p = A.perm_part(idx);
    const std::size_t cs = A.swap_colors(c, i);
    if (A.left_s_increases(i, p))
      out.add(A.index(cs, A.left_s(i, p)), a);
    else
      out.add(A.index(cs, p), -a);
    const int ci = A.color_at(c, i), cj = A.color_at(c, i + 1);
    if (ci < cj) out.add(idx, -a);
    if (ci > cj) out.add(A.index(cs, p), a);
  }
  return out;
}

/// xi_j L_c T_sigma = u_{c_j} L_c T_sigma.
inline AlgebraElement left_mult_xi(int j, const AlgebraElement& x) {
  const auto& A = *x.algebra();
  if (j < 1 || j > A.n()) throw std::out_of_range("xi index out of range");
  AlgebraElement out(x.algebra());
  for (const auto& [idx, a] : x.terms()) out.add(idx, a * A.params().param(A.color_at(A.color_part(idx), j)));
  return out;
}

/// x <- (xi_j - shift) x, in place.
inline void left_mult_xi_shifted(int j, const Rational& shift, AlgebraElement& x) {
  const auto& A = *x.algebra();
  if (j < 1 || j > A.n()) throw std::out_of_range("xi index out of range");
  Rational f;
  auto& terms = x.terms();
  for (auto it = terms.begin(); it != terms.end();) {
    f = A.params().param(A.color_at(A.color_part(it->first), j)) - shift;
    if (f.get_den() == 1 && it->second.get_den() == 1)
      it->second.get_num() *= f.get_num();
    else
      it->second *= f;
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
}

/// T_sigma y along a reduced word.
inline AlgebraElement left_mult_T_sigma(std::size_t perm_index, AlgebraElement y) {
  const auto& word = y.algebra()->reduced_word(perm_index);
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_mult_T(*it, y);
  return y;
}

/// x y = sum over terms of x of coeff * L_c (T_sigma y).
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  x.same_algebra(y);
  const auto& A = *x.algebra();
  const std::size_t nf = A.num_permutations();
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> by_perm;
  for (const auto& [idx, a] : x.terms()) by_perm[A.perm_part(idx)].emplace_back(A.color_part(idx), &a);
  AlgebraElement out(x.algebra());
  auto& acc = out.terms();
  for (const auto& [p, group] : by_perm) {
    AlgebraElement moved;
    if (p != A.identity_index()) moved = left_mult_T_sigma(p, y);
    const SparseVector& z = p == A.identity_index() ? y.terms() : moved.terms();
    // Terms of z with color c occupy the index range [c n!, (c+1) n!).
    for (const auto& [c, a] : group) {
      auto it = z.lower_bound(c * nf);
      const auto stop = z.lower_bound((c + 1) * nf);
      for (; it != stop; ++it) {
        auto [slot, inserted] = acc.try_emplace(it->first, *a * it->second);
        if (!inserted) {
          slot->second += *a * it->second;
          if (slot->second == 0) acc.erase(slot);
        } else if (slot->second == 0) {
          acc.erase(slot);
        }
      }
    }
  }
  return out;
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

inline AlgebraElement basis_element(const AlgebraPtr& alg, const ColorWord& c, const Permutation& p) {
  AlgebraElement e(alg);
  e.add(alg->index(alg->color_index(c), alg->permutation_index(p)), 1);
  return e;
}

/// 1 = sum_c L_c.
inline AlgebraElement algebra_one(const AlgebraPtr& alg) {
  AlgebraElement e(alg);
  for (std::size_t c = 0; c < alg->num_color_words(); ++c) e.add(alg->index(c, alg->identity_index()), 1);
  return e;
}

inline AlgebraElement generator_T(const AlgebraPtr& alg, int i) { return left_mult_T(i, algebra_one(alg)); }
inline AlgebraElement generator_xi(const AlgebraPtr& alg, int j) { return left_mult_xi(j, algebra_one(alg)); }

}  // namespace cycloribbon::oracle
