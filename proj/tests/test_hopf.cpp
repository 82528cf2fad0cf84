#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "cycloribbon/hopf/symmetric.hpp"
#include "support/hopf_properties.hpp"

using namespace cycloribbon;

namespace {

LinearCombination R(std::string_view text) { return parse_combination(Basis::MR_R, text); }
LinearCombination S(std::string_view text) { return parse_combination(Basis::MR_S, text); }
LinearCombination F(std::string_view text) { return parse_combination(Basis::QMR_F, text); }
LinearCombination H(std::string_view text) { return parse_combination(Basis::SYM_h, text); }
LinearCombination N(std::string_view text) { return parse_combination(Basis::NCSF_R, text); }

std::vector<int> descents_of(const std::vector<int>& w) {
  std::vector<int> d;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) d.push_back(static_cast<int>(i));
  return d;
}

// Product of fundamental quasi-symmetric functions: shuffle two words with the
// prescribed descent sets on disjoint alphabets, read off descent sets.
LinearCombination qsym_shuffle_oracle(const Composition& I, const Composition& J, std::mt19937& rng) {
  const auto word_with_descents = [&](const Composition& K) {
    std::vector<int> w(static_cast<std::size_t>(K.size()));
    std::iota(w.begin(), w.end(), 1);
    do std::shuffle(w.begin(), w.end(), rng);
    while (descents_of(w) != K.descents());
    return w;
  };
  const auto u = word_with_descents(I);
  auto v = word_with_descents(J);
  for (auto& x : v) x += I.size();
  const std::size_t m = u.size(), n = v.size();
  LinearCombination out(Basis::QMR_F);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + n)); ++mask) {
    if (std::popcount(mask) != static_cast<int>(n)) continue;
    std::vector<int> w;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < m + n; ++k) w.push_back(mask >> k & 1U ? v[j++] : u[i++]);
    const auto shape = Composition::from_descents(static_cast<int>(m + n), descents_of(w));
    out.add(Label{shape.parts(), std::vector<int>(m + n, 1)}, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("S to R on a five-part colored composition", "[mr]") {
  const auto s = S("2^1.1^2.2^2.1^1.3^1");
  const auto expected = R("2^1.1^2.2^2.1^1.3^1 + 2^1.3^2.1^1.3^1 + 2^1.1^2.2^2.4^1 + 2^1.3^2.4^1");
  CHECK(S_to_R(s) == expected);
  CHECK(R_to_S(expected) == s);
}

TEST_CASE("S and R are inverse changes of basis", "[mr]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& cc : enumerate_colored_compositions(n, 3)) {
      const auto r = LinearCombination::term(Basis::MR_R, to_label(cc));
      CHECK(S_to_R(R_to_S(r)) == r);
    }
}

TEST_CASE("restriction to the 0-Hecke level", "[mr]") {
  CHECK(pi_restriction(R("2^1.1^2.2^2.1^1.3^1")) == N("2,1,2,1,3 + 2,1,3,3 + 3,2,1,3 + 3,3,3"));
  CHECK(pi_restriction(R("1^1.1^2")) == N("1,1 + 2"));
  CHECK(pi_restriction(R("1^1.1^1")) == N("1,1"));
  // Through S: every S^(I,u) restricts to S^I.
  for (int n = 1; n <= 4; ++n)
    for (const auto& cc : enumerate_colored_compositions(n, 2)) {
      const auto r = LinearCombination::term(Basis::MR_R, to_label(cc));
      CHECK(pi_restriction(R_to_S(r)) == pi_restriction(r));
    }
}

TEST_CASE("R product glues equal colors only", "[mr]") {
  CHECK(mr_product_R(R("1^1"), R("1^1")) == R("1^1.1^1 + 2^1"));
  CHECK(mr_product_R(R("1^1"), R("1^2")) == R("1^1.1^2"));
  CHECK(mr_product_R(R("2^2.1^1"), R("3^1.2^3")) == R("2^2.1^1.3^1.2^3 + 2^2.4^1.2^3"));
  CHECK(ncsf_product_R(N("1"), N("2")) == N("1,2 + 3"));
  CHECK(mr_product_R(LinearCombination::unit(Basis::MR_R), R("2^1")) == R("2^1"));
}

TEST_CASE("S to R is a ring homomorphism", "[mr]") {
  cycloribbon::testing::RandomElements g(11);
  for (int k = 0; k < 200; ++k) {
    const int r = g.uniform(1, 3);
    const auto a = R_to_S(g.R(g.uniform(1, 3), r));
    const auto b = R_to_S(g.R(g.uniform(1, 3), r));
    CHECK(S_to_R(mr_product_S(a, b)) == mr_product_R(S_to_R(a), S_to_R(b)));
  }
}

TEST_CASE("MR coproduct of generators", "[mr]") {
  TensorCombination expected(Basis::MR_S);
  expected.add(Label{}, Label{{2}, {3}}, 1);
  expected.add(Label{{1}, {3}}, Label{{1}, {3}}, 1);
  expected.add(Label{{2}, {3}}, Label{}, 1);
  CHECK(mr_coproduct(S("2^3")) == expected);
  // Primitive-like degree one element in the R basis.
  TensorCombination one(Basis::MR_R);
  one.add(Label{}, Label{{1}, {2}}, 1);
  one.add(Label{{1}, {2}}, Label{}, 1);
  CHECK(mr_coproduct(R("1^2")) == one);
}

TEST_CASE("one-color F product matches the quasi-symmetric shuffle", "[qmr]") {
  std::mt19937 rng(3);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n + m <= 6; ++n)
      for (const auto& I : compositions_of(m))
        for (const auto& J : compositions_of(n)) {
          const auto a = LinearCombination::term(Basis::QMR_F, Label{I.parts(), std::vector<int>(static_cast<std::size_t>(m), 1)});
          const auto b = LinearCombination::term(Basis::QMR_F, Label{J.parts(), std::vector<int>(static_cast<std::size_t>(n), 1)});
          CHECK(qmr_product_F(a, b) == qsym_shuffle_oracle(I, J, rng));
        }
}

TEST_CASE("F product of the two-cell example", "[qmr]") {
  CHECK(qmr_product_F(F("1,1|2,1"), F("2|1,2")) ==
        F("1,3|2,1,1,2 + 1,1,2|2,1,1,2 + 2,2|1,2,1,2 + 1,2,1|2,1,2,1 + 3,1|1,2,2,1 + 2,1,1|1,2,2,1"));
  CHECK(qmr_product_F(F("1|1"), F("1|2")) == F("2|1,2 + 1,1|2,1"));
  CHECK(qmr_product_F(F("1|2"), F("1|1")) == F("2|1,2 + 1,1|2,1"));
}

TEST_CASE("F coproduct deconcatenates", "[qmr]") {
  TensorCombination expected(Basis::QMR_F);
  expected.add(Label{}, Label{{1, 1}, {2, 1}}, 1);
  expected.add(Label{{1}, {2}}, Label{{1}, {1}}, 1);
  expected.add(Label{{1, 1}, {2, 1}}, Label{}, 1);
  CHECK(qmr_coproduct_F(F("1,1|2,1")) == expected);
}

TEST_CASE("R and F are dual bases", "[duality]") {
  for (int n = 1; n <= 4; ++n) {
    const auto ccs = enumerate_colored_compositions(n, 2);
    const auto ribbons = enumerate_cycloribbons(n, 2);
    REQUIRE(ccs.size() == ribbons.size());
    std::set<ColoredRibbon> images;
    for (const auto& cc : ccs) {
      const auto dual = dual_cycloribbon(cc);
      CHECK(dual.is_cycloribbon());
      images.insert(dual);
      int ones = 0;
      for (const auto& x : ribbons)
        ones += duality_pairing(LinearCombination::term(Basis::MR_R, to_label(cc)),
                                LinearCombination::term(Basis::QMR_F, to_label(x))) == 1;
      CHECK(ones == 1);
    }
    CHECK(images.size() == ribbons.size());
  }
}

TEST_CASE("randomized Hopf identities", "[property]") {
  for (const auto& [name, tally] : cycloribbon::testing::hopf_property_suite(2024, 120, 5, 3)) {
    INFO(name << ": " << tally.first_failure);
    CHECK(tally.failures == 0);
    CHECK(tally.cases == 120);
  }
}

TEST_CASE("Jacobi-Trudi expansions", "[sym]") {
  CHECK(schur_in_h({1, 1}) == H("1^1.1^1 + -1*2^1"));
  CHECK(schur_in_h({2, 1}, 2) == H("1^2.2^2 + -1*3^2"));
  CHECK(schur_in_h({1, 1, 1}) == H("1^1.1^1.1^1 + -2*1^1.2^1 + 3^1"));
  CHECK(schur_in_h({3}) == H("3^1"));
  CHECK(multipartition_class(parse_multipartition("1|1")) == H("1^1.1^2"));
}

TEST_CASE("the maps e and d", "[sym]") {
  CHECK(e_map(R("1^1.1^1")) == H("1^1.1^1 + -1*2^1"));
  CHECK(e_map(R("1^2.1^1")) == H("1^1.1^2"));
  CHECK(e_map(S("2^2.1^1")) == H("1^1.2^2"));
  CHECK(d_map(H("1^1.1^1")) == F("2|1,1 + 1,1|1,1"));
  CHECK(d_map(H("2^1")) == F("2|1,1"));
  CHECK(d_map(multipartition_class(parse_multipartition("1,1|"))) == F("1,1|1,1"));
  // d is an algebra morphism.
  for (const auto& a : h_monomials(2, 2))
    for (const auto& b : h_monomials(2, 2)) {
      const auto la = LinearCombination::term(Basis::SYM_h, a), lb = LinearCombination::term(Basis::SYM_h, b);
      CHECK(d_map(sym_product_h(la, lb)) == qmr_product_F(d_map(la), d_map(lb)));
    }
}

TEST_CASE("multipartition enumeration", "[sym]") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(enumerate_multipartitions(2, 2).size() == 5);
  CHECK(enumerate_multipartitions(3, 2).size() == 10);
  CHECK(enumerate_multipartitions(3, 3).size() == 22);
}
