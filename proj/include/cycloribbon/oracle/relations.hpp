#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cycloribbon/oracle/algebra.hpp"

namespace cycloribbon::oracle {

using Json = nlohmann::ordered_json;

/// Outcome of one family of checks on one instance.
struct CheckReport {
  std::string check;
  std::string instance;
  bool pass = true;
  Json counterexample;  // null when pass
};

inline Json to_json(const CheckReport& r) {
  return Json{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}, {"counterexample", r.counterexample}};
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

inline bool is_zero(const AlgebraElement& x) { return x.is_zero(); }
inline bool is_zero(const Matrix& m) { return m.is_zero(); }

inline Json describe(const AlgebraElement& x, std::size_t max_terms = 8) {
  const auto& A = *x.algebra();
  Json terms = Json::array();
  for (const auto& [idx, c] : x.terms()) {
    if (terms.size() == max_terms) break;
    terms.push_back(Json{{"colors", A.color_word(A.color_part(idx))},
                         {"permutation", A.permutation(A.perm_part(idx))},
                         {"coeff", to_string(c)}});
  }
  return Json{{"nonzero_terms", x.terms().size()}, {"terms", std::move(terms)}};
}

inline Json describe(const Matrix& m, std::size_t max_terms = 8) {
  Json entries = Json::array();
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) {
        if (count++ < max_terms) entries.push_back(Json{{"row", i}, {"col", j}, {"value", to_string(m(i, j))}});
      }
  return Json{{"nonzero_entries", count}, {"entries", std::move(entries)}};
}

/// Generators of the algebra itself.
class AlgebraGenerators {
 public:
  using Element = AlgebraElement;
  explicit AlgebraGenerators(AlgebraPtr alg) : alg_(std::move(alg)) {}
  const AlgebraParams& params() const { return alg_->params(); }
  Element one() const { return algebra_one(alg_); }
  Element T(int i) const { return generator_T(alg_, i); }
  Element xi(int j) const { return generator_xi(alg_, j); }

 private:
  AlgebraPtr alg_;
};

/// Product of elements by a balanced tree, so that intermediate sizes stay small.
template <class Element>
Element product_tree(std::vector<Element> xs) {
  while (xs.size() > 1) {
    std::vector<Element> next;
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) next.push_back(xs[k] * xs[k + 1]);
    if (xs.size() % 2) next.push_back(std::move(xs.back()));
    xs = std::move(next);
  }
  return xs.front();
}

/// (x - u_1) ... (x - u_r) for x = xi_j.
template <class Gens>
typename Gens::Element cyclotomic_value(const Gens& g, const typename Gens::Element& x, int) {
  const auto one = g.one();
  std::vector<typename Gens::Element> factors;
  for (const auto& uk : g.params().u) factors.push_back(x - one * uk);
  return product_tree(std::move(factors));
}

/// On the algebra itself: the factors applied to the unit one at a time.
inline AlgebraElement cyclotomic_value(const AlgebraGenerators& g, const AlgebraElement&, int j) {
  auto acc = g.one();
  for (const auto& uk : g.params().u) left_mult_xi_shifted(j, uk, acc);
  return acc;
}

/// P_k(x) = prod_{l != k} (x - u_l) / (u_k - u_l), evaluated literally for k = 1..r.
template <class Element>
std::vector<Element> lagrange_polynomials(const Element& x, const Element& one, const std::vector<Rational>& u) {
  const std::size_t r = u.size();
  std::vector<Element> factors;
  for (const auto& ul : u) factors.push_back(x - one * ul);
  std::vector<Element> prefix{one}, suffix(r, one);
  for (std::size_t k = 0; k + 1 < r; ++k) prefix.push_back(prefix.back() * factors[k]);
  for (std::size_t k = r - 1; k > 0; --k) suffix[k - 1] = factors[k] * suffix[k];
  std::vector<Element> out;
  for (std::size_t k = 0; k < r; ++k) {
    Rational denom = 1;
    for (std::size_t l = 0; l < r; ++l)
      if (l != k) denom *= u[k] - u[l];
    out.push_back(prefix[k] * suffix[k] * Rational(1 / denom));
  }
  return out;
}

/// Which index set the last family uses. The corrected one is
/// j not in {i, i+1}; the literal reading j not in {i-1, i} clashes with
/// the exchange relations and is kept only to demonstrate that.
enum class DistantXiIndexing { Corrected, Literal };

/// Checks the eight relation families at q = 0 on any realization of the
/// generators (the algebra itself or action matrices of a module).
template <class Gens>
std::vector<CheckReport> check_relations(const Gens& g, DistantXiIndexing indexing = DistantXiIndexing::Corrected) {
  using E = typename Gens::Element;
  const auto& p = g.params();
  const int n = p.n;
  const std::string inst = describe(p);
  const E one = g.one();
  std::vector<E> T(static_cast<std::size_t>(n)), X(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i < n; ++i) T[i] = g.T(i);
  for (int j = 1; j <= n; ++j) X[j] = g.xi(j);

  std::vector<CheckReport> out;
  auto family = [&](const std::string& name) -> CheckReport& {
    out.push_back(CheckReport{name, inst, true, nullptr});
    return out.back();
  };
  auto expect_zero = [&](CheckReport& rep, const E& diff, Json where) {
    if (rep.pass && !is_zero(diff)) {
      rep.pass = false;
      where["difference"] = describe(diff);
      rep.counterexample = std::move(where);
    }
  };

  {
    auto& rep = family("quadratic");
    for (int i = 1; i < n; ++i) expect_zero(rep, T[i] * T[i] + T[i], Json{{"i", i}});
  }
  {
    auto& rep = family("braid");
    for (int i = 1; i + 1 < n; ++i)
      expect_zero(rep, T[i] * T[i + 1] * T[i] - T[i + 1] * T[i] * T[i + 1], Json{{"i", i}});
  }
  {
    auto& rep = family("far_commutation");
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) expect_zero(rep, T[i] * T[j] - T[j] * T[i], Json{{"i", i}, {"j", j}});
  }
  {
    auto& rep = family("cyclotomic");
    for (int j = 1; j <= n; ++j) expect_zero(rep, cyclotomic_value(g, X[j], j), Json{{"j", j}});
  }
  {
    auto& rep = family("xi_commutation");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) expect_zero(rep, X[i] * X[j] - X[j] * X[i], Json{{"i", i}, {"j", j}});
  }
  {
    auto& rep = family("T_xi_exchange");
    std::vector<std::vector<E>> P(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n && n > 1; ++j) P[j] = lagrange_polynomials(X[j], one, p.u);
    for (int i = 1; i < n; ++i) {
      E sum = one * Rational(0);
      for (std::size_t c1 = 0; c1 < p.u.size(); ++c1) {
        E inner = one * Rational(0);
        for (std::size_t c2 = c1 + 1; c2 < p.u.size(); ++c2) inner += P[i + 1][c2] * Rational(p.u[c2] - p.u[c1]);
        if (!is_zero(inner)) sum += P[i][c1] * inner;
      }
      expect_zero(rep, T[i] * X[i] - X[i + 1] * T[i] - sum, Json{{"i", i}});
    }
  }
  {
    auto& rep = family("symmetric_xi");
    for (int i = 1; i < n; ++i) {
      const E s = X[i] + X[i + 1];
      expect_zero(rep, T[i] * s - s * T[i], Json{{"i", i}});
    }
  }
  {
    auto& rep = family("distant_xi");
    for (int i = 1; i < n; ++i)
      for (int j = 1; j <= n; ++j) {
        const bool skip = indexing == DistantXiIndexing::Corrected ? (j == i || j == i + 1) : (j == i - 1 || j == i);
        if (!skip) expect_zero(rep, T[i] * X[j] - X[j] * T[i], Json{{"i", i}, {"j", j}});
      }
  }
  return out;
}

}  // namespace cycloribbon::oracle
