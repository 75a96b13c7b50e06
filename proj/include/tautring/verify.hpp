#pragma once

// Locus restriction and checks decided through the intersection pairing.
//
// Equality verdicts hold modulo the kernel of the pairing with complementary
// generators and are reported as pass-mod-pairing-kernel. Inequality, nonvanishing
// and independence verdicts are absolute.

#include <json.hpp>
#include <string>
#include <vector>

#include "tautring/pixton.hpp"
#include "tautring/strata.hpp"

namespace tautring {

enum class Verdict { pass, fail, pass_mod_kernel };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct CheckReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::fail;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0;

  bool passed() const { return verdict != Verdict::fail; }
};

nlohmann::json to_json(const CheckReport& r, bool with_timing = true);
bool all_passed(const std::vector<CheckReport>& reports);

/// Drops terms whose graph fails the locus predicate.
TautClass restrict(const TautClass& x, LocusKind locus);
MixedClass restrict(const MixedClass& x, LocusKind locus);

/// Generators of degree d whose graph fails the locus predicate.
std::vector<DecoratedStratum> off_locus_generators(int g, int n, int d, LocusKind locus);

CheckReport is_zero_mod_pairing(const TautClass& x, const std::string& name = "zero-mod-pairing");
/// Pass when x ≡ Σ λ_s s modulo the pairing kernel; the witness carries λ, or on
/// failure a complementary class y with ⟨s, y⟩ = 0 for all s and ⟨x, y⟩ = 1.
CheckReport in_span_mod_pairing(const TautClass& x, const std::vector<DecoratedStratum>& span,
                                const std::string& name = "in-span-mod-pairing");
/// x = y on the locus: on `all` a pairing equality, otherwise x − y lies in the off-locus span.
CheckReport equal_on_locus(const TautClass& x, const TautClass& y, LocusKind locus, const std::string& name);

/// Rank of the pairing vectors of classes of one degree, with pivot columns.
int pairing_rank(const std::vector<TautClass>& classes, std::vector<int>* pivots = nullptr);

/// 2^{-g} P_g^{g,k}(A).
TautClass dr_cycle(const RamificationData& data);

CheckReport check_multiplicativity(const RamificationData& a, const RamificationData& b, LocusKind locus);
CheckReport check_exp_identities(const RamificationData& data);
CheckReport check_gplus1(const RamificationData& data);

/// The five verdicts on M̄_{1,3} for a = (2,4,−6), b = (−3,−1,4), k = 0:
/// inequality, support, treelike-nontrivial, delta-irr-square, independence.
std::vector<CheckReport> check_section7();

}  // namespace tautring
