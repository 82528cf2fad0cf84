#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cycloribbon/io/literals.hpp"
#include "cycloribbon/oracle/module.hpp"

namespace cycloribbon::oracle {

inline Json character_json(const Character& chi) { return Json{{"xi", chi.xi}, {"t", chi.t}}; }

/// Relations (1)-(8) on the algebra, the basis count, and the identities
/// L_c = P_{c_1}(xi_1)...P_{c_n}(xi_n), T_sigma = sum_c L_c T_sigma.
/// The last two are skipped above max_basis_check basis elements.
inline std::vector<CheckReport> verify_relations(const AlgebraParams& params,
                                                 std::size_t max_basis_check = 400) {
  const auto alg = make_algebra(params);
  const AlgebraGenerators gens(alg);
  auto out = check_relations(gens);
  const std::string inst = describe(params);

  CheckReport dim{"dimension", inst, true, nullptr};
  Integer expected = factorial(params.n);
  for (int k = 0; k < params.n; ++k) expected *= params.r;
  if (Integer(static_cast<unsigned long>(alg->dimension())) != expected) {
    dim.pass = false;
    dim.counterexample = Json{{"dimension", alg->dimension()}, {"expected", expected.get_str()}};
  }
  out.push_back(std::move(dim));

  if (alg->dimension() <= max_basis_check) {
    CheckReport basis{"lagrange_basis", inst, true, nullptr};
    const auto one = gens.one();
    std::vector<std::vector<AlgebraElement>> P(static_cast<std::size_t>(params.n) + 1);
    for (int j = 1; j <= params.n; ++j) P[j] = lagrange_polynomials(gens.xi(j), one, params.u);
    for (std::size_t c = 0; c < alg->num_color_words() && basis.pass; ++c) {
      AlgebraElement lc = one;
      for (int j = 1; j <= params.n; ++j) lc = lc * P[j][static_cast<std::size_t>(alg->color_at(c, j) - 1)];
      AlgebraElement expect(alg);
      expect.add(alg->index(c, alg->identity_index()), 1);
      if (!(lc == expect)) {
        basis.pass = false;
        basis.counterexample = Json{{"colors", alg->color_word(c)}, {"difference", describe(lc - expect)}};
      }
    }
    for (std::size_t p = 0; p < alg->num_permutations() && basis.pass; ++p) {
      AlgebraElement ts = one;
      for (int i : alg->reduced_word(p)) ts = ts * gens.T(i);
      AlgebraElement expect(alg);
      for (std::size_t c = 0; c < alg->num_color_words(); ++c) expect.add(alg->index(c, p), 1);
      if (!(ts == expect)) {
        basis.pass = false;
        basis.counterexample = Json{{"permutation", alg->permutation(p)}, {"difference", describe(ts - expect)}};
      }
    }
    out.push_back(std::move(basis));
  }
  return out;
}

/// Brute-force characters versus the characters of the cycloribbons.
inline CheckReport check_character_census(const AlgebraParams& params) {
  CheckReport rep{"character_census", describe(params), true, nullptr};
  const auto found = enumerate_one_dim_characters(params);
  std::vector<Character> predicted;
  for (const auto& s : all_simples(params.n, params.r)) predicted.push_back(character_of_simple(s));
  std::sort(predicted.begin(), predicted.end());
  if (found != predicted) {
    rep.pass = false;
    Json missing = Json::array(), extra = Json::array();
    for (const auto& c : predicted)
      if (!std::binary_search(found.begin(), found.end(), c)) missing.push_back(character_json(c));
    for (const auto& c : found)
      if (!std::binary_search(predicted.begin(), predicted.end(), c)) extra.push_back(character_json(c));
    rep.counterexample = Json{{"found", found.size()}, {"predicted", predicted.size()},
                              {"missing", missing}, {"unexpected", extra}};
  }
  return rep;
}

/// Composition factors of an explicitly induced module, as simple labels.
inline std::vector<SimpleLabel> explicit_induction_factors(const std::vector<SimpleLabel>& factors,
                                                           const AlgebraParams& params) {
  std::vector<Character> chars;
  for (const auto& s : factors) chars.push_back(character_of_simple(s));
  const auto induced = build_induced_module(chars, params);
  std::vector<SimpleLabel> out;
  for (const auto& chi : composition_factors(induced.module)) out.push_back(simple_of_character(chi));
  std::sort(out.begin(), out.end(), [](const SimpleLabel& x, const SimpleLabel& y) {
    return CanonicalRibbonLess{}(x.ribbon(), y.ribbon());
  });
  return out;
}

inline Json ribbons_json(const std::vector<SimpleLabel>& xs) {
  Json a = Json::array();
  for (const auto& s : xs) a.push_back(format_ribbon(s.ribbon()));
  return a;
}

/// Rule used to predict the factors of an induction product of two simples.
using InductionRule = std::vector<SimpleLabel> (*)(const SimpleLabel&, const SimpleLabel&, int r);

inline std::vector<SimpleLabel> transport_rule(const SimpleLabel& a, const SimpleLabel& b, int r) {
  return induce_simples(a, b, ColorInversion::Transport, r);
}
inline std::vector<SimpleLabel> negate_rule(const SimpleLabel& a, const SimpleLabel& b, int r) {
  return induce_simples(a, b, ColorInversion::Negate, r);
}

/// Every ordered pair of simples of sizes m, k >= 1 with m + k <= max_grade:
/// explicit factors versus the combinatorial rule.
inline std::vector<CheckReport> cross_check_induction(int max_grade, int r, std::vector<Rational> u = {},
                                                      InductionRule rule = transport_rule) {
  std::vector<CheckReport> out;
  for (int total = 2; total <= max_grade; ++total) {
    const AlgebraParams params(total, r, u.empty() ? std::vector<Rational>{} : std::vector<Rational>(u.begin(), u.begin() + r));
    CheckReport rep{"induction_factors", describe(params), true, nullptr};
    std::size_t pairs = 0;
    for (int m = 1; m < total && rep.pass; ++m)
      for (const auto& a : all_simples(m, r)) {
        if (!rep.pass) break;
        for (const auto& b : all_simples(total - m, r)) {
          ++pairs;
          const auto got = explicit_induction_factors({a, b}, params);
          const auto want = rule(a, b, r);
          if (got != want) {
            rep.pass = false;
            rep.counterexample = Json{{"lhs", format_ribbon(a.ribbon())}, {"rhs", format_ribbon(b.ribbon())},
                                      {"explicit", ribbons_json(got)}, {"predicted", ribbons_json(want)}};
            break;
          }
        }
      }
    rep.check += " (" + std::to_string(pairs) + " pairs)";
    out.push_back(std::move(rep));
  }
  return out;
}

/// Submodule generated by L_c eta_I is contained in the one generated by
/// L_c' eta_I exactly when c <=_I c'.
inline CheckReport check_order_lemma(const Composition& shape, const AlgebraParams& params) {
  CheckReport rep{"order_lemma I=" + format_composition(shape), describe(params), true, nullptr};
  const auto M = build_M_I(shape, params);
  std::vector<EchelonBasis> subs;
  for (const auto& v : M.word_vectors) subs.push_back(generated_submodule(M.module(), v));
  for (std::size_t a = 0; a < M.words.size() && rep.pass; ++a)
    for (std::size_t b = 0; b < M.words.size(); ++b) {
      const bool contained = subs[b].contains(M.word_vectors[a]);
      const bool ordered = leq_I(shape, M.words[a], M.words[b]);
      if (contained != ordered) {
        rep.pass = false;
        rep.counterexample = Json{{"c", M.words[a]}, {"c_prime", M.words[b]},
                                  {"contained", contained}, {"leq_I", ordered}};
        break;
      }
    }
  return rep;
}

/// The socle of M_I (sum of its one-dimensional submodules) is spanned by the
/// images of L_c eta_I with [I, c] a cycloribbon.
inline CheckReport check_socle(const Composition& shape, const AlgebraParams& params) {
  CheckReport rep{"socle I=" + format_composition(shape), describe(params), true, nullptr};
  const auto M = build_M_I(shape, params);
  EchelonBasis socle;
  for (const auto& chi : enumerate_one_dim_characters(params))
    for (const auto& v : joint_eigenvectors(M.module(), chi)) socle.insert(v);
  EchelonBasis spanned;
  std::size_t count = 0;
  for (std::size_t k = 0; k < M.words.size(); ++k)
    if (ColoredRibbon(shape, M.words[k]).is_cycloribbon()) {
      spanned.insert(M.word_vectors[k]);
      ++count;
    }
  bool same = socle.rank() == spanned.rank() && spanned.rank() == count;
  for (const auto& [p, v] : spanned.rows()) same = same && socle.contains(v);
  if (!same)
    rep.counterexample = Json{{"socle_dimension", socle.rank()}, {"cycloribbon_span", spanned.rank()},
                              {"cycloribbons", count}};
  rep.pass = same;
  return rep;
}

}  // namespace cycloribbon::oracle
