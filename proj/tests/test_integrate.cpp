#include <doctest.h>

#include "tautring/integrate.hpp"
#include "tautring/product.hpp"
#include "tautring/strata.hpp"

using namespace tautring;

TEST_CASE("known Witten-Kontsevich numbers") {
  CHECK(psi_integral(0, {0, 0, 0}) == 1);
  CHECK(psi_integral(1, {1}) == Rational(1, 24));
  CHECK(psi_integral(2, {4}) == Rational(1, 1152));
  CHECK(psi_integral(2, {2, 3}) == Rational(29, 5760));
  CHECK(psi_integral(3, {7}) == Rational(1, 82944));
  CHECK(psi_integral(1, {1, 1}) == Rational(1, 24));
  CHECK(psi_integral(1, {1, 0}) == 0);
  CHECK(psi_integral(1, {2}) == 0);
  CHECK_THROWS(psi_integral(0, {0, 0}));
  CHECK_THROWS(psi_integral(1, {-1, 2}));
}

TEST_CASE("genus-one closed form for tau_1^n") {
  // <τ_1^n>_1 = (n-1)!/24
  for (int n = 1; n <= 6; ++n) CHECK(psi_integral(1, std::vector<int>(n, 1)) == ratio(factorial(n - 1), 24));
}

TEST_CASE("kappa integrals against pushforward along forgetful maps") {
  // ∫ κ_b Π ψ^d = <Π τ_d τ_{b+1}>, ∫ κ_a κ_b Π ψ^d = <Π τ_d τ_{a+1} τ_{b+1}> - <Π τ_d τ_{a+b+1}>
  struct Case {
    int g;
    std::vector<int> psi;
  };
  for (const Case& c : {Case{0, {0, 0, 0}}, Case{0, {1, 0, 0, 0}}, Case{1, {0}}, Case{1, {1, 0}}, Case{2, {1}},
                        Case{0, {0, 0, 0, 0, 0}}, Case{1, {0, 0, 0}}, Case{2, {}}}) {
    const int n = static_cast<int>(c.psi.size());
    int used = 0;
    for (int x : c.psi) used += x;
    const int free = 3 * c.g - 3 + n - used;
    if (free < 1 || 2 * c.g - 2 + n <= 0) continue;
    auto with = [&](std::vector<int> extra) {
      auto e = c.psi;
      e.insert(e.end(), extra.begin(), extra.end());
      return psi_integral(c.g, e);
    };
    CHECK(kappa_psi_integral(c.g, {free}, c.psi) == with({free + 1}));
    for (int a = 1; a < free; ++a) {
      const int b = free - a;
      CHECK(kappa_psi_integral(c.g, {a, b}, c.psi) == with({a + 1, b + 1}) - with({a + b + 1}));
    }
  }
}

TEST_CASE("classical kappa values") {
  CHECK(kappa_psi_integral(1, {1}, {0}) == Rational(1, 24));
  CHECK(kappa_psi_integral(0, {1}, {0, 0, 0, 0}) == 1);
  CHECK(kappa_psi_integral(0, {1, 1}, {0, 0, 0, 0, 0}) == 5);
  CHECK(kappa_psi_integral(0, {2}, {0, 0, 0, 0, 0}) == 1);
  CHECK(kappa_psi_integral(2, {3}, {}) == Rational(1, 1152));
}

TEST_CASE("evaluation of strata on M11,1") {
  const auto pm = pairing_matrix(1, 1, 1);
  CHECK(pm.rows.size() == 3);
  CHECK(pm.rank == 1);
  CHECK(evaluate(psi_class(1, 1, 1)) == Rational(1, 24));
  CHECK(evaluate(kappa_class(1, 1, 1)) == Rational(1, 24));
  CHECK(evaluate(stratum_class(irreducible_graph(1, 1))) == 1);
  CHECK(evaluate(boundary_divisor(irreducible_graph(1, 1))) == Rational(1, 2));
  CHECK_THROWS(evaluate(TautClass::fundamental(1, 1)));
}

TEST_CASE("pairing ranks match known Picard ranks") {
  CHECK(pairing_matrix(0, 5, 1).rank == 5);
  CHECK(pairing_matrix(0, 5, 1).rows.size() == 16);
  CHECK(pairing_matrix(1, 2, 1).rank == 2);
  CHECK(pairing_matrix(2, 0, 1).rank == 2);
  CHECK(pairing_matrix(0, 6, 1).rank == 16);
}

TEST_CASE("pairing matrix is symmetric in complementary degree") {
  const auto& a = pairing_matrix(1, 3, 1);
  const auto& b = pairing_matrix(1, 3, 2);
  REQUIRE(a.rows == b.columns);
  for (size_t i = 0; i < a.rows.size(); ++i)
    for (size_t j = 0; j < a.columns.size(); ++j) CHECK(a.entries[i][j] == b.entries[j][i]);
  CHECK(a.rank == b.rank);
}

TEST_CASE("pairing vector agrees with direct evaluation") {
  const TautClass x = Rational(3) * psi_class(1, 2, 1) - kappa_class(1, 2, 1);
  const auto& pm = pairing_matrix(1, 2, 1);
  const auto v = pairing_vector(x);
  REQUIRE(v.size() == pm.columns.size());
  for (size_t j = 0; j < v.size(); ++j) CHECK(v[j] == evaluate(multiply(x, TautClass::from_stratum(pm.columns[j]))));
}

TEST_CASE("integration examples") {
  CHECK(psi_integral(0, {0, 0, 0, 1}) == 1);
  CHECK(psi_integral(0, {1, 1, 0, 0, 0}) == 2);
  CHECK(psi_integral(0, {2, 0, 0, 0, 0}) == 1);
  CHECK(psi_integral(1, {0, 2}) == Rational(1, 24));
  CHECK(kappa_psi_integral(1, {}, {1}) == psi_integral(1, {1}));
  CHECK(evaluate(TautClass::fundamental(0, 3)) == 1);
  const auto& pm = pairing_matrix(0, 4, 1);
  REQUIRE(pm.rows.size() == 8);
  for (const auto& row : pm.entries) CHECK(row == std::vector<Rational>{1});
  CHECK(pairing_matrix(1, 1, 2).rows.empty());
  CHECK(pairing_matrix(1, 1, 2).entries.empty());
}
