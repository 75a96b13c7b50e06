#include <doctest.h>

#include "tautring/strata.hpp"

using namespace tautring;

TEST_CASE("generators of M11,1 in degree 1") {
  const auto gens = generators(1, 1, 1);
  CHECK(gens.size() == 3);
  CHECK(std::is_sorted(gens.begin(), gens.end()));
  for (const auto& s : gens) CHECK(s.codim() == 1);
}

TEST_CASE("generators respect vertex dimensions") {
  for (int d = 0; d <= 3; ++d)
    for (const auto& s : generators(1, 3, d)) {
      CHECK(s.codim() == d);
      CHECK_FALSE(exceeds_vertex_dimension(*s.graph, s.decoration));
    }
  CHECK(generators(0, 4, 2).empty());
}

TEST_CASE("class arithmetic") {
  const TautClass p1 = psi_class(1, 2, 1), p2 = psi_class(1, 2, 2);
  TautClass x = p1 + p2;
  CHECK(x.terms().size() == 2);
  x -= p1;
  CHECK(x == p2);
  CHECK((Rational(0) * x).is_zero());
  CHECK((p1 - p1).is_zero());
  CHECK(combine({{2, p1}, {-1, p1}}) == p1);
  CHECK_THROWS_AS(combine({{1, p1}, {1, kappa_class(1, 3, 1)}}), std::invalid_argument);
  CHECK_THROWS(p1 + TautClass::fundamental(1, 2));
}

TEST_CASE("canonical strata are invariant under automorphisms") {
  // ψ on either half of the loop of δ_irr is the same stratum.
  const GraphPtr loop = irreducible_graph(1, 1);
  Monomial a = Monomial::one(loop->graph), b = a;
  a.psi_half[0] = 1;
  b.psi_half[1] = 1;
  CHECK(canonical_stratum(loop, a) == canonical_stratum(loop, b));
}

TEST_CASE("reduced boundary divisor carries the automorphism factor") {
  const GraphPtr loop = irreducible_graph(1, 1);
  CHECK(loop->aut_count() == 2);
  CHECK(boundary_divisor(loop) == Rational(1, 2) * stratum_class(loop));
  const GraphPtr sep = separating_graph(1, 2, 0, {1, 2});
  CHECK(boundary_divisor(sep) == stratum_class(sep));
}

TEST_CASE("partitions and compositions") {
  CHECK(integer_partitions(4).size() == 5);
  CHECK(compositions(3, 2).size() == 4);
  CHECK(compositions(0, 3).size() == 1);
  CHECK(compositions(2, 0).empty());
}

TEST_CASE("mixed classes") {
  MixedClass m(1, 2);
  CHECK(m.top_degree() == 2);
  m[1] += psi_class(1, 2, 1);
  MixedClass z = m - m;
  for (int d = 0; d <= 2; ++d) CHECK(z[d].is_zero());
}

TEST_CASE("strata examples") {
  const TautClass p = psi_class(1, 1, 1);
  const TautClass five = Rational(2) * p + Rational(3) * p;
  CHECK(five.coefficient(p.terms().begin()->first) == 5);
  // the same divisor seen from its two sides
  const TautClass same = boundary_divisor(separating_graph(1, 3, 0, {1, 2})) + boundary_divisor(separating_graph(1, 3, 1, {3}));
  CHECK(same.terms().size() == 1);
  CHECK(same.terms().begin()->second == 2);
  const TautClass two = boundary_divisor(separating_graph(1, 3, 0, {1, 2})) + boundary_divisor(separating_graph(1, 3, 1, {}));
  CHECK(two.terms().size() == 2);
  CHECK(generators(0, 4, 1).size() == 8);
  CHECK(generators(1, 1, 0).size() == 1);
  CHECK(separating_graph(0, 4, 0, {1, 2}) == separating_graph(0, 4, 0, {3, 4}));
}
