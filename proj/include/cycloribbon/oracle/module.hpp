#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloribbon/oracle/relations.hpp"
#include "cycloribbon/representation/modules.hpp"

namespace cycloribbon::oracle {

/// Finite-dimensional module given by the action matrices of the generators.
/// T[i] for i = 1..n-1 and xi[j] for j = 1..n; index 0 is unused.
struct ExplicitModule {
  AlgebraParams params;
  std::size_t dim = 0;
  std::vector<Matrix> T;
  std::vector<Matrix> xi;
};

class ModuleGenerators {
 public:
  using Element = Matrix;
  explicit ModuleGenerators(const ExplicitModule& m) : m_(m) {}
  const AlgebraParams& params() const { return m_.params; }
  Element one() const { return Matrix::identity(m_.dim); }
  Element T(int i) const { return m_.T.at(static_cast<std::size_t>(i)); }
  Element xi(int j) const { return m_.xi.at(static_cast<std::size_t>(j)); }

 private:
  const ExplicitModule& m_;
};

inline std::vector<CheckReport> check_relations(const ExplicitModule& m) {
  return check_relations(ModuleGenerators(m));
}

/// One-dimensional module with the given character.
inline ExplicitModule character_module(const Character& chi, const AlgebraParams& params) {
  const int n = params.n;
  if (chi.xi.size() != static_cast<std::size_t>(n) || chi.t.size() + 1 != static_cast<std::size_t>(n))
    throw std::invalid_argument("character does not match the algebra size");
  ExplicitModule m{params, 1, std::vector<Matrix>(static_cast<std::size_t>(n)),
                   std::vector<Matrix>(static_cast<std::size_t>(n) + 1)};
  for (int i = 1; i < n; ++i) {
    m.T[i] = Matrix(1, 1);
    m.T[i](0, 0) = chi.t[static_cast<std::size_t>(i - 1)];
  }
  for (int j = 1; j <= n; ++j) {
    m.xi[j] = Matrix(1, 1);
    m.xi[j](0, 0) = params.param(chi.xi[static_cast<std::size_t>(j - 1)]);
  }
  return m;
}

/// Brute force over T_i in {0, -1} and xi_j in {u_1, ..., u_r}, keeping the
/// assignments that satisfy every relation.
inline std::vector<Character> enumerate_one_dim_characters(const AlgebraParams& params) {
  const int n = params.n, r = params.r;
  std::vector<Character> out;
  Character chi{ColorWord(static_cast<std::size_t>(n), 1), std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  for (;;) {
    if (all_pass(check_relations(character_module(chi, params)))) out.push_back(chi);
    std::size_t k = 0;
    for (; k < chi.t.size(); ++k) {
      if (chi.t[k] == 0) {
        chi.t[k] = -1;
        break;
      }
      chi.t[k] = 0;
    }
    if (k < chi.t.size()) continue;
    std::size_t j = 0;
    for (; j < chi.xi.size(); ++j) {
      if (chi.xi[j] < r) {
        ++chi.xi[j];
        break;
      }
      chi.xi[j] = 1;
    }
    if (j == chi.xi.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Quotient of a module by an invariant subspace W. Coordinates of the
/// quotient are the non-pivot coordinates of W's echelon form.
struct Quotient {
  EchelonBasis kernel;
  std::vector<std::size_t> basis;             // old coordinates kept
  std::map<std::size_t, std::size_t> position;  // old coordinate -> new

  SparseVector project(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [k, x] : kernel.reduce(v)) out.emplace(position.at(k), x);
    return out;
  }
};

inline Quotient make_quotient(EchelonBasis w, std::size_t dim) {
  Quotient q{std::move(w), {}, {}};
  for (std::size_t k = 0; k < dim; ++k)
    if (!q.kernel.is_pivot(k)) {
      q.position.emplace(k, q.basis.size());
      q.basis.push_back(k);
    }
  return q;
}

template <class Act>
Matrix action_matrix(const Quotient& q, Act&& act) {
  const std::size_t d = q.basis.size();
  Matrix m(d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (const auto& [row, x] : q.project(act(q.basis[col]))) m(row, col) = x;
  return m;
}

inline ExplicitModule quotient_module(const ExplicitModule& m, const EchelonBasis& w) {
  for (const auto& [p, v] : w.rows()) {
    for (int i = 1; i < m.params.n; ++i)
      if (!w.contains(m.T[i].apply(v))) throw std::logic_error("subspace is not invariant under T");
    for (int j = 1; j <= m.params.n; ++j)
      if (!w.contains(m.xi[j].apply(v))) throw std::logic_error("subspace is not invariant under xi");
  }
  const Quotient q = make_quotient(w, m.dim);
  ExplicitModule out{m.params, q.basis.size(), std::vector<Matrix>(m.T.size()), std::vector<Matrix>(m.xi.size())};
  for (int i = 1; i < m.params.n; ++i)
    out.T[i] = action_matrix(q, [&](std::size_t k) { return m.T[i].column(k); });
  for (int j = 1; j <= m.params.n; ++j)
    out.xi[j] = action_matrix(q, [&](std::size_t k) { return m.xi[j].column(k); });
  return out;
}

/// A / A.{g - value}, acted on by left multiplication.
struct IdealQuotient {
  AlgebraPtr algebra;
  Quotient quotient;
  ExplicitModule module;

  SparseVector image(const AlgebraElement& x) const { return quotient.project(x.terms()); }
};

inline IdealQuotient quotient_by_left_ideal(const AlgebraPtr& alg, const std::vector<AlgebraElement>& gens) {
  EchelonBasis ideal;
  for (std::size_t b = 0; b < alg->dimension(); ++b) {
    AlgebraElement basis(alg, SparseVector{{b, Rational(1)}});
    for (const auto& g : gens) ideal.insert((basis * g).terms());
  }
  IdealQuotient out{alg, make_quotient(std::move(ideal), alg->dimension()), {}};
  const int n = alg->n();
  auto& m = out.module;
  m.params = alg->params();
  m.dim = out.quotient.basis.size();
  m.T.resize(static_cast<std::size_t>(n));
  m.xi.resize(static_cast<std::size_t>(n) + 1);
  auto unit = [&](std::size_t k) { return AlgebraElement(alg, SparseVector{{k, Rational(1)}}); };
  for (int i = 1; i < n; ++i)
    m.T[i] = action_matrix(out.quotient, [&](std::size_t k) { return left_mult_T(i, unit(k)).terms(); });
  for (int j = 1; j <= n; ++j)
    m.xi[j] = action_matrix(out.quotient, [&](std::size_t k) { return left_mult_xi(j, unit(k)).terms(); });
  return out;
}

/// Module induced from the parabolic subalgebra AKS_{m1} x AKS_{m2} x ...
/// with a one-dimensional character on each factor.
inline IdealQuotient build_induced_module(const std::vector<Character>& chars, std::vector<Rational> u = {}) {
  ColorWord colors;
  std::vector<int> t;
  std::vector<bool> boundary;
  for (const auto& chi : chars) {
    if (chi.xi.empty() || chi.t.size() + 1 != chi.xi.size()) throw std::invalid_argument("malformed character");
    if (!colors.empty()) {
      t.push_back(0);
      boundary.push_back(true);
    }
    colors.insert(colors.end(), chi.xi.begin(), chi.xi.end());
    t.insert(t.end(), chi.t.begin(), chi.t.end());
    boundary.insert(boundary.end(), chi.t.size(), false);
  }
  if (colors.empty()) throw std::invalid_argument("no factors to induce from");
  int r = 0;
  for (int c : colors) r = std::max(r, c);
  if (!u.empty()) r = static_cast<int>(u.size());
  const auto alg = make_algebra(AlgebraParams(static_cast<int>(colors.size()), r, std::move(u)));
  for (int c : colors)
    if (c > alg->r()) throw std::invalid_argument("character color exceeds r");
  std::vector<AlgebraElement> gens;
  const auto one = algebra_one(alg);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!boundary[i]) gens.push_back(generator_T(alg, static_cast<int>(i) + 1) - one * Rational(t[i]));
  for (std::size_t j = 0; j < colors.size(); ++j)
    gens.push_back(generator_xi(alg, static_cast<int>(j) + 1) - one * alg->params().param(colors[j]));
  return quotient_by_left_ideal(alg, gens);
}

/// Same, for an algebra with explicit parameters (r may exceed the colors used).
inline IdealQuotient build_induced_module(const std::vector<Character>& chars, const AlgebraParams& params) {
  int n = 0;
  for (const auto& chi : chars) n += static_cast<int>(chi.xi.size());
  if (n != params.n) throw std::invalid_argument("factor sizes do not add up to n");
  return build_induced_module(chars, params.u);
}

/// T_i acts on the H_n(0)-simple S_I by -1 at the descents of I and 0 elsewhere.
inline std::vector<int> hecke_simple_eigenvalues(const Composition& shape) {
  const auto flags = shape.descent_flags();
  std::vector<int> t;
  for (int i = 1; i < shape.size(); ++i) t.push_back(flags[static_cast<std::size_t>(i)] ? -1 : 0);
  return t;
}

/// M_I = A / A.{T_i - t_i}; its vectors of interest are the images of the L_c.
struct InducedHeckeModule {
  Composition shape;
  IdealQuotient q;
  std::vector<ColorWord> words;          // all color words, in index order
  std::vector<SparseVector> word_vectors;  // image of L_c

  const ExplicitModule& module() const { return q.module; }
};

inline InducedHeckeModule build_M_I(const Composition& shape, const AlgebraParams& params) {
  if (shape.size() != params.n) throw std::invalid_argument("|I| must equal n");
  const auto alg = make_algebra(params);
  const auto t = hecke_simple_eigenvalues(shape);
  const auto one = algebra_one(alg);
  std::vector<AlgebraElement> gens;
  for (int i = 1; i < params.n; ++i) gens.push_back(generator_T(alg, i) - one * Rational(t[static_cast<std::size_t>(i - 1)]));
  InducedHeckeModule out{shape, quotient_by_left_ideal(alg, gens), {}, {}};
  for (std::size_t c = 0; c < alg->num_color_words(); ++c) {
    out.words.push_back(alg->color_word(c));
    AlgebraElement lc(alg);
    lc.add(alg->index(c, alg->identity_index()), 1);
    out.word_vectors.push_back(out.q.image(lc));
  }
  return out;
}

/// Kernel of all (g - chi(g)) on the module.
inline std::vector<SparseVector> joint_eigenvectors(const ExplicitModule& m, const Character& chi) {
  std::vector<SparseVector> rows;
  const auto id = Matrix::identity(m.dim);
  auto push = [&](const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto row = a.row(i);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  };
  for (int i = 1; i < m.params.n; ++i) push(m.T[i] - id * Rational(chi.t[static_cast<std::size_t>(i - 1)]));
  for (int j = 1; j <= m.params.n; ++j) push(m.xi[j] - id * m.params.param(chi.xi[static_cast<std::size_t>(j - 1)]));
  return kernel(rows, m.dim);
}

/// Socle layer by layer: record every one-dimensional submodule, quotient, repeat.
inline std::vector<Character> composition_factors(const ExplicitModule& m) {
  const auto candidates = enumerate_one_dim_characters(m.params);
  std::vector<Character> out;
  ExplicitModule cur = m;
  while (cur.dim > 0) {
    EchelonBasis socle;
    for (const auto& chi : candidates) {
      for (const auto& v : joint_eigenvectors(cur, chi)) {
        if (!socle.insert(v)) throw std::logic_error("joint eigenspaces of distinct characters intersect");
        out.push_back(chi);
      }
    }
    if (socle.rank() == 0)
      throw std::runtime_error("no one-dimensional submodule in a module of dimension " + std::to_string(cur.dim));
    cur = quotient_module(cur, socle);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest submodule containing v.
inline EchelonBasis generated_submodule(const ExplicitModule& m, const SparseVector& v) {
  EchelonBasis sub;
  std::vector<SparseVector> frontier{v};
  while (!frontier.empty()) {
    SparseVector x = std::move(frontier.back());
    frontier.pop_back();
    if (!sub.insert(x)) continue;
    for (int i = 1; i < m.params.n; ++i) frontier.push_back(m.T[i].apply(x));
    for (int j = 1; j <= m.params.n; ++j) frontier.push_back(m.xi[j].apply(x));
  }
  return sub;
}

}  // namespace cycloribbon::oracle
