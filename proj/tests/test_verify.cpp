#include <doctest.h>

#include "tautring/integrate.hpp"
#include "tautring/product.hpp"
#include "tautring/serialize.hpp"
#include "tautring/verify.hpp"

using namespace tautring;

TEST_CASE("verdict text") {
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::pass_mod_kernel}) CHECK(parse_verdict(to_string(v)) == v);
  CHECK(to_string(Verdict::pass_mod_kernel) == "pass-mod-pairing-kernel");
  CHECK_THROWS(parse_verdict("maybe"));
}

TEST_CASE("restriction drops off-locus strata") {
  const auto p = pixton_class(RamificationData::from_a(1, 0, {2, 4, -6}), 2);
  const TautClass tl = restrict(p, LocusKind::treelike);
  const TautClass ct = restrict(p, LocusKind::compact_type);
  for (const auto& [s, c] : tl.terms()) CHECK(in_locus(s.graph->graph, LocusKind::treelike));
  for (const auto& [s, c] : ct.terms()) CHECK(in_locus(s.graph->graph, LocusKind::compact_type));
  CHECK(restrict(tl, LocusKind::compact_type) == ct);
  CHECK(restrict(p, LocusKind::all) == p);
  const TautClass rest = p - tl;
  for (const auto& [s, c] : rest.terms()) CHECK_FALSE(in_locus(s.graph->graph, LocusKind::treelike));
}

TEST_CASE("zero modulo pairing") {
  CHECK(is_zero_mod_pairing(TautClass(1, 1, 1)).verdict == Verdict::pass_mod_kernel);
  CHECK(is_zero_mod_pairing(psi_class(1, 1, 1)).verdict == Verdict::fail);
  // ψ1 - κ1 and 12ψ1 - [δ_irr stratum] vanish on M̄_{1,1}
  CHECK(is_zero_mod_pairing(psi_class(1, 1, 1) - kappa_class(1, 1, 1)).passed());
  CHECK(is_zero_mod_pairing(Rational(12) * psi_class(1, 1, 1) - Rational(1, 2) * stratum_class(irreducible_graph(1, 1)))
            .passed());
}

TEST_CASE("span membership and its failure witness") {
  const auto gens = generators(0, 5, 1);
  const auto off = off_locus_generators(0, 5, 1, LocusKind::smooth);
  CHECK(off.size() == 10);
  CHECK(in_span_mod_pairing(psi_class(0, 5, 1), off).passed());
  const CheckReport fail = in_span_mod_pairing(kappa_class(1, 2, 1), {});
  REQUIRE(fail.verdict == Verdict::fail);
  const TautClass y = tautclass_from_json({{"g", 1}, {"n", 2}, {"degree", 1}, {"terms", fail.witness.at("separating_class")}});
  CHECK(evaluate(multiply(kappa_class(1, 2, 1), y)) == 1);
  const std::vector<DecoratedStratum> span = {generators(1, 2, 1).front()};
  const CheckReport f2 = in_span_mod_pairing(kappa_class(1, 2, 1), span);
  if (f2.verdict == Verdict::fail) {
    const TautClass y2 =
        tautclass_from_json({{"g", 1}, {"n", 2}, {"degree", 1}, {"terms", f2.witness.at("separating_class")}});
    CHECK(evaluate(multiply(kappa_class(1, 2, 1), y2)) == 1);
    CHECK(evaluate(multiply(TautClass::from_stratum(span[0]), y2)) == 0);
  }
}

TEST_CASE("pairing rank") {
  CHECK(pairing_rank({psi_class(1, 1, 1), kappa_class(1, 1, 1)}) == 1);
  CHECK(pairing_rank({psi_class(1, 2, 1), boundary_divisor(irreducible_graph(1, 2))}) == 2);
}

TEST_CASE("multiplicativity fails on the whole space for the counterexample") {
  const auto a = RamificationData::from_a(1, 0, {2, 4, -6});
  const auto b = RamificationData::from_a(1, 0, {-3, -1, 4});
  CHECK(check_multiplicativity(a, b, LocusKind::treelike).passed());
  CHECK_FALSE(check_multiplicativity(a, b, LocusKind::all).passed());
  CHECK_THROWS(check_multiplicativity(a, RamificationData::from_a(1, 0, {1, -1}), LocusKind::all));
}

TEST_CASE("section 7 bundle") {
  const auto reports = check_section7();
  REQUIRE(reports.size() == 5);
  CHECK(all_passed(reports));
  CHECK(reports[0].name == "inequality");
  CHECK(reports[4].witness.at("rank") == 3);
  const auto j = to_json(reports[0], false);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(reports[0]).contains("seconds"));
}

TEST_CASE("small identity checks") {
  CHECK(check_exp_identities(RamificationData::from_a(1, 1, {0})).passed());
  CHECK(check_gplus1(RamificationData::from_a(1, 1, {1, -1})).passed());
}

TEST_CASE("verify examples") {
  const TautClass irr = boundary_divisor(irreducible_graph(1, 1));
  CHECK(restrict(irr, LocusKind::compact_type).is_zero());
  CHECK(restrict(irr, LocusKind::treelike) == irr);
  const auto banana = intern(StableGraph{{0, 0}, {{1}, {2, 3}}, {{0, 1}, {0, 1}}});
  CHECK(restrict(stratum_class(banana), LocusKind::treelike).is_zero());
  const CheckReport z = is_zero_mod_pairing(psi_class(1, 1, 1));
  CHECK(z.witness.at("pairing") == "1/24");
  CHECK(is_zero_mod_pairing(pixton_class(RamificationData::from_A(1, 0, {0}), 2)).passed());
  const auto gens = generators(1, 2, 1);
  const CheckReport self = in_span_mod_pairing(TautClass::from_stratum(gens[0]), gens);
  CHECK(self.passed());
  const auto bananas = off_locus_generators(1, 2, 2, LocusKind::treelike);
  CHECK(bananas.size() == 1);
  // top degree: the banana stratum pairs to 1 with the fundamental class, so ψ₁² is in its span
  const TautClass p2 = multiply(psi_class(1, 2, 1), psi_class(1, 2, 1));
  const CheckReport top = in_span_mod_pairing(p2, bananas);
  CHECK(top.passed());
  CHECK(top.witness.at("coefficients").at(0).at("coeff") == "1/24");
  // in degree 1 on M̄_{1,3}, ψ₁ is not a combination of δ_irr alone
  CHECK_FALSE(in_span_mod_pairing(psi_class(1, 3, 1), off_locus_generators(1, 3, 1, LocusKind::compact_type)).passed());
  const auto b13 = off_locus_generators(1, 3, 2, LocusKind::treelike);
  CHECK(b13.size() == 3);
}

TEST_CASE("multiplicativity with b = 0") {
  // D_a·D_0 against D_a·D_a: equal on the treelike locus, not on all of M̄_{1,3}.
  const auto a = RamificationData::from_a(1, 0, {2, 4, -6});
  const auto zero = RamificationData::from_a(1, 0, {0, 0, 0});
  CHECK(check_multiplicativity(a, zero, LocusKind::treelike).passed());
  CHECK_FALSE(check_multiplicativity(a, zero, LocusKind::all).passed());
  const auto a2 = RamificationData::from_a(1, 0, {1, -1});
  CHECK(check_multiplicativity(a2, RamificationData::from_a(1, 0, {0, 0}), LocusKind::all).passed());
}

TEST_CASE("exp identities for small data") {
  for (int a = 1; a <= 3; ++a) {
    const CheckReport r = check_exp_identities(RamificationData::from_A(1, 0, {a, -a}));
    CHECK(r.passed());
  }
  CHECK(check_exp_identities(RamificationData::from_A(1, 0, {0})).passed());
}
