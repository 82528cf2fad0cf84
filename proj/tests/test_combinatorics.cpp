#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "catch_amalgamated.hpp"

#include "cycloribbon/combinatorics/permutation.hpp"
#include "cycloribbon/io/literals.hpp"

using namespace cycloribbon;

namespace {

// Cells of a ribbon as (row, column) pairs, built from the part lengths.
std::vector<std::pair<int, int>> cell_positions(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> cells;
  int row = 0, col = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (int j = 0; j < parts[k]; ++j) cells.emplace_back(row, col + j);
    col += parts[k] - 1;
    ++row;
  }
  return cells;
}

// Monotonicity read off the geometry: horizontal neighbours vs vertical ones.
bool geometric_cyclo(const std::vector<int>& parts, const ColorWord& c, bool anti) {
  const auto cells = cell_positions(parts);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const bool same_row = cells[i].first == cells[i + 1].first;
    const bool up = c[i] < c[i + 1], down = c[i] > c[i + 1];
    if (same_row && (anti ? up : down)) return false;
    if (!same_row && (anti ? down : up)) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_part_vectors(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n > 0 ? n - 1 : 0)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    if (n > 0) parts.push_back(run);
    out.push_back(parts);
  }
  return out;
}

std::set<std::pair<std::vector<int>, ColorWord>> brute_ribbons(int n, int r, bool anti) {
  std::set<std::pair<std::vector<int>, ColorWord>> out;
  for (const auto& parts : all_part_vectors(n)) {
    ColorWord c(static_cast<std::size_t>(n), 1);
    for (;;) {
      if (geometric_cyclo(parts, c, anti)) out.emplace(parts, c);
      std::size_t k = 0;
      while (k < c.size() && c[k] == r) c[k++] = 1;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  return out;
}

std::set<std::pair<std::vector<int>, ColorWord>> as_set(const std::vector<ColoredRibbon>& xs) {
  std::set<std::pair<std::vector<int>, ColorWord>> out;
  for (const auto& x : xs) out.emplace(x.shape.parts(), x.colors);
  return out;
}

std::vector<int> word_descents(const std::vector<int>& w) {
  std::vector<int> d;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) d.push_back(static_cast<int>(i));
  return d;
}

int disorder(const Composition& shape, const ColorWord& c) {
  const auto flags = shape.descent_flags();
  int d = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      bool same_row = true;
      for (std::size_t k = i + 1; k <= j; ++k) same_row = same_row && !flags[k];
      bool same_column = true;
      for (std::size_t k = i + 1; k <= j; ++k) same_column = same_column && flags[k];
      if (same_row && c[i] > c[j]) ++d;
      if (same_column && c[i] < c[j]) ++d;
    }
  return d;
}

}  // namespace

TEST_CASE("compositions and descent sets", "[composition]") {
  const Composition I{2, 3, 1, 1};
  CHECK(I.size() == 7);
  CHECK(I.descents() == std::vector<int>{2, 5, 6});
  CHECK(Composition::from_descents(7, I.descents()) == I);
  CHECK(Composition::from_descent_mask(4, 0b101) == Composition{1, 2, 1});
  CHECK(compositions_of(4).size() == 8);
  CHECK(compositions_of(0).size() == 1);
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::from_descents(3, std::vector<int>{3}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::from_descents(3, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredRibbon(Composition{2}, ColorWord{1}), std::invalid_argument);
}

TEST_CASE("cycloribbon enumeration agrees with the geometric definition", "[ribbon]") {
  for (int n = 0; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r) {
      CAPTURE(n, r);
      CHECK(as_set(enumerate_cycloribbons(n, r)) == brute_ribbons(n, r, false));
      CHECK(as_set(enumerate_anticycloribbons(n, r)) == brute_ribbons(n, r, true));
    }
}

TEST_CASE("cycloribbon count is r(r+1)^(n-1)", "[ribbon]") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 4; ++r) {
      std::size_t expected = static_cast<std::size_t>(r);
      for (int k = 1; k < n; ++k) expected *= static_cast<std::size_t>(r + 1);
      CHECK(enumerate_cycloribbons(n, r).size() == expected);
      CHECK(enumerate_anticycloribbons(n, r).size() == expected);
      CHECK(enumerate_colored_compositions(n, r).size() == expected);
    }
}

TEST_CASE("the five cycloribbons of shape (2,1) with two colors", "[ribbon]") {
  const Composition shape{2, 1};
  const auto got = enumerate_cycloribbons(3, 2, &shape);
  std::vector<std::string> text;
  for (const auto& x : got) text.push_back(format_ribbon(x));
  CHECK(text == std::vector<std::string>{"2,1|1,1,1", "2,1|1,2,1", "2,1|1,2,2", "2,1|2,2,1", "2,1|2,2,2"});
}

TEST_CASE("enumeration order is canonical", "[ribbon]") {
  const auto xs = enumerate_cycloribbons(4, 3);
  CHECK(std::is_sorted(xs.begin(), xs.end(), CanonicalRibbonLess{}));
  const auto ys = enumerate_colored_compositions(4, 2);
  CHECK(std::is_sorted(ys.begin(), ys.end(), CanonicalColoredCompositionLess{}));
}

TEST_CASE("phi on the ten-cell example", "[phi]") {
  const auto R = parse_ribbon("3,1,1,1,4|1,1,3,3,3,2,1,1,4,5");
  REQUIRE(R.is_cycloribbon());
  const auto image = phi(R);
  CHECK(format_ribbon(image) == "2,1,1,4,1,1|1,1,3,3,3,2,1,1,4,5");
  CHECK(image.is_anticycloribbon());
  CHECK(phi(image) == R);
}

TEST_CASE("phi is an involution exchanging cyclo- and anticycloribbons", "[phi]") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r) {
      for (const auto& parts : all_part_vectors(n)) {
        ColorWord c(static_cast<std::size_t>(n), 1);
        for (;;) {
          const ColoredRibbon x(Composition(parts), c);
          REQUIRE(phi(phi(x)) == x);
          CHECK(phi(x).is_anticycloribbon() == x.is_cycloribbon());
          std::size_t k = 0;
          while (k < c.size() && c[k] == r) c[k++] = 1;
          if (k == c.size()) break;
          ++c[k];
        }
      }
    }
}

TEST_CASE("colored compositions and anticycloribbons", "[colored]") {
  // Shape (2,1) with two colors: anticycloribbon reading -> colored composition.
  const std::vector<std::pair<std::string, std::string>> table{
      {"2,1|2,1,1", "1^2.1^1.1^1"}, {"2,1|2,1,2", "1^2.1^1.1^2"}, {"2,1|1,1,2", "2^1.1^2"},
      {"2,1|2,2,2", "2^2.1^2"},     {"2,1|1,1,1", "2^1.1^1"}};
  for (const auto& [anti, cc] : table) {
    const auto a = parse_ribbon(anti);
    REQUIRE(a.is_anticycloribbon());
    CHECK(format_colored_composition(anticycloribbon_to_colored_comp(a)) == cc);
    CHECK(colored_comp_to_anticycloribbon(parse_colored_composition(cc)) == a);
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : enumerate_anticycloribbons(n, 3))
      CHECK(colored_comp_to_anticycloribbon(anticycloribbon_to_colored_comp(a)) == a);
  CHECK_THROWS_AS(anticycloribbon_to_colored_comp(parse_ribbon("2|1,2")), std::invalid_argument);
}

TEST_CASE("order <=_I on the seven-cell example", "[order]") {
  const Composition I{2, 3, 1, 1};
  const ColorWord T{2, 1, 1, 3, 3, 4, 3};
  CHECK(leq_I_covers(I, T) == std::vector<ColorWord>{{1, 2, 1, 3, 3, 4, 3}, {2, 1, 1, 3, 4, 3, 3}});
  CHECK(leq_I_below(I, T) ==
        std::vector<ColorWord>{{1, 2, 1, 3, 3, 4, 3}, {1, 2, 1, 3, 4, 3, 3}, {2, 1, 1, 3, 4, 3, 3}});
  CHECK(leq_I(I, T, T));
  CHECK(leq_I(I, {1, 2, 1, 3, 4, 3, 3}, T));
  CHECK_FALSE(leq_I(I, T, {1, 2, 1, 3, 4, 3, 3}));
}

TEST_CASE("covers strictly decrease the disorder count, minimal words are cycloribbons", "[order]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& I : compositions_of(n)) {
      ColorWord c(static_cast<std::size_t>(n), 1);
      for (;;) {
        const auto covers = leq_I_covers(I, c);
        for (const auto& w : covers) CHECK(disorder(I, w) < disorder(I, c));
        CHECK(covers.empty() == ColoredRibbon(I, c).is_cycloribbon());
        std::size_t k = 0;
        while (k < c.size() && c[k] == 3) c[k++] = 1;
        if (k == c.size()) break;
        ++c[k];
      }
    }
}

TEST_CASE("longest permutation of a descent class", "[permutation]") {
  CHECK(max_inversion_perm(Composition{2, 1}) == std::vector<int>{2, 3, 1});
  CHECK(max_inversion_perm(Composition{1, 3}) == std::vector<int>{4, 1, 2, 3});
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::pair<int, std::vector<int>>> best;
    std::map<std::vector<int>, int> counts;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const auto d = word_descents(w);
      ++counts[d];
      const int inv = inversions(w);
      auto it = best.find(d);
      if (it == best.end() || it->second.first < inv) best[d] = {inv, w};
    } while (std::next_permutation(w.begin(), w.end()));
    for (const auto& I : compositions_of(n)) {
      CAPTURE(I.parts());
      CHECK(max_inversion_perm(I) == best.at(I.descents()).second);
      CHECK(descent_composition(max_inversion_perm(I)) == I);
      CHECK(descent_class_size(I) == counts.at(I.descents()));
    }
  }
}

TEST_CASE("binomials and multinomials", "[permutation]") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(factorial(6) == 720);
}

TEST_CASE("colored permutation inversion", "[permutation]") {
  const ColoredPermutation p({2, 3, 1}, {1, 2, 3});
  const auto t = inverse_colored_perm(p);
  CHECK(t.word == std::vector<int>{3, 1, 2});
  CHECK(t.colors == ColorWord{3, 1, 2});
  CHECK(inverse_colored_perm(t) == p);
  const auto g = inverse_colored_perm(p, ColorInversion::Negate, 3);
  CHECK(g.colors == ColorWord{2, 1, 3});
  CHECK(inverse_colored_perm(g, ColorInversion::Negate, 3) == p);
  // With two colors negation is the identity on colors.
  CHECK(inverse_colored_perm(ColoredPermutation({2, 1}, {1, 2}), ColorInversion::Negate, 2).colors == ColorWord{2, 1});
  CHECK_THROWS_AS(inverse_colored_perm(p, ColorInversion::Negate), std::invalid_argument);
}

TEST_CASE("shifted shuffles and colored descents", "[permutation]") {
  const ColoredPermutation a({2, 1}, {1, 2}), b({1, 2, 3}, {2, 2, 1});
  const auto sh = shifted_shuffle(a, b);
  CHECK(sh.size() == 10);
  CHECK(std::is_sorted(sh.begin(), sh.end()));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    ColorWord c(static_cast<std::size_t>(n));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 3);
    const auto R = colored_descent_composition(ColoredPermutation(w, c));
    CHECK(R.is_cycloribbon());
    CHECK(R.colors == c);
  }
  // Uncolored case: the usual descent composition.
  CHECK(colored_descent_composition(ColoredPermutation({1, 4, 3, 2}, {1, 1, 1, 1})).shape == Composition{2, 1, 1});
}

TEST_CASE("colored permutation of a cycloribbon recovers it", "[permutation]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& R : enumerate_cycloribbons(n, 3)) {
      const auto back = inverse_colored_perm(colored_permutation_of(R));
      CHECK(back.word == max_inversion_perm(R.shape));
      CHECK(colored_descent_composition(back) == R);
    }
}
