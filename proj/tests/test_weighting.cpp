#include <doctest.h>

#include "tautring/strata.hpp"
#include "tautring/weighting.hpp"

using namespace tautring;

TEST_CASE("ramification data") {
  const auto d = RamificationData::from_a(2, 1, {2});
  CHECK(d.A == std::vector<int>{3});
  CHECK(d.a() == std::vector<int>{2});
  CHECK_THROWS(RamificationData::from_A(1, 0, {1, 0}));
  CHECK_THROWS(RamificationData::from_a(2, 1, {1}));
  CHECK_THROWS(RamificationData::from_A(0, 0, {0, 0}));
  const auto s = RamificationData::from_a(1, 0, {1, -1}) + RamificationData::from_a(1, 1, {2, -2});
  CHECK(s.k == 1);
  CHECK(s.A == std::vector<int>{4, -2});
  CHECK(residue_threshold(RamificationData::from_A(1, 1, {3, -1})) == 2 * (4 + 2) + 3);
}

TEST_CASE("power sums") {
  CHECK(power_sum(0, 5) == 6);
  CHECK(power_sum(1, 10) == 55);
  CHECK(power_sum(3, 4) == 100);
  CHECK(power_sum(2, -1) == 0);
  for (int p = 0; p <= 8; ++p) {
    Rational direct = 0;
    for (int x = 0; x <= 13; ++x) direct += pow(Rational(x), p);
    CHECK(power_sum(p, 13) == direct);
  }
}

TEST_CASE("interpolation recovers polynomials and rejects inconsistent samples") {
  std::vector<std::pair<Rational, Rational>> s;
  for (int r = 5; r < 11; ++r) s.emplace_back(r, Rational(r * r * r) - Rational(1, 3) * r + 7);
  const RPolynomial p = interpolate(s, 3);
  CHECK(p.constant_term() == 7);
  CHECK(p.degree() == 3);
  CHECK(p(Rational(2)) == Rational(8) - Rational(2, 3) + 7);
  CHECK(interpolate_constant_term(s, 4) == 7);
  s.back().second += 1;
  CHECK_THROWS_AS(interpolate(s, 3), ThresholdError);
}

TEST_CASE("weighting counts and the two evaluation methods") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 3}}) {
    const auto data = RamificationData::from_a(g, 1, g == 2 ? std::vector<int>{2} : std::vector<int>(n, 0));
    const int r = residue_threshold(data) + 1;
    for (const auto& graph : enumerate_stable_graphs(g, n, std::min(3, 3 * g - 3 + n))) {
      const auto p = WeightingProblem::make(graph, data, r);
      const auto ws = admissible_weightings(p);
      Integer expected = 1;
      for (int i = 0; i < graph->graph.h1(); ++i) expected *= r;
      CHECK(Integer(ws.size()) == expected);
      const std::vector<int> powers(graph->graph.num_edges(), 2);
      CHECK(weighting_sum(p, powers, WeightingMethod::faulhaber) == weighting_sum(p, powers, WeightingMethod::direct));
      const auto fc = weighting_coefficients(p, 2, WeightingMethod::faulhaber);
      CHECK(fc == weighting_coefficients(p, 2, WeightingMethod::direct));
    }
  }
}

TEST_CASE("loop weighting sum is a polynomial with the Bernoulli constant term") {
  // r^{-1} Σ_{w=0}^{r-1} w(r-w) = (r²-1)/6, constant term -1/6
  const auto data = RamificationData::from_A(1, 0, {0});
  const auto loop = irreducible_graph(1, 1);
  std::vector<std::pair<Rational, Rational>> samples;
  for (int r = 4; r < 12; ++r) {
    const Rational v = weighting_sum(WeightingProblem::make(loop, data, r), {1});
    CHECK(v == ratio(r * r - 1, 6));
    samples.emplace_back(r, v);
  }
  CHECK(interpolate_constant_term(samples, 4) == Rational(-1, 6));
}

TEST_CASE("weighting and interpolation examples") {
  const auto data = RamificationData::from_A(1, 0, {0});
  const auto loop = irreducible_graph(1, 1);
  CHECK(weighting_sum(WeightingProblem::make(loop, data, 5), {1}) == 4);
  CHECK(weighting_sum(WeightingProblem::make(loop, data, 7), {1}) == 8);
  CHECK(weighting_sum(WeightingProblem::make(loop, data, 11), {1}) == 20);
  const RPolynomial p = interpolate({{5, 4}, {7, 8}, {11, 20}}, 2);
  CHECK(p.constant_term() == Rational(-1, 6));
  CHECK(p(Rational(13)) == 28);
  CHECK(interpolate_constant_term({{3, 9}, {4, 9}, {8, 9}}, 1) == 9);
  CHECK(interpolate_constant_term({{3, 3}, {4, 4}, {9, 9}}, 1) == 0);
  const auto tdata = RamificationData::from_A(1, 1, {3, -1});
  const auto tree = separating_graph(1, 2, 0, {1, 2});
  const auto tp = WeightingProblem::make(tree, tdata, 20);
  REQUIRE(admissible_weightings(tp).size() == 1);
  const int w = admissible_weightings(tp)[0][0];
  CHECK(weighting_sum(tp, {1}) == Rational(w * (20 - w)));
}
