#pragma once

// Pixton's classes P_g^{d,k}(A):
//
//   P = Σ_Γ 1/|Aut Γ| · const_r[ r^{-h¹} Σ_w ξ_Γ*( Π_v exp(-k²κ_1(v)) Π_i exp(A_i²ψ_i)
//         Π_e (1 - exp(-w(h)w(h')(ψ_h+ψ_h')))/(ψ_h+ψ_h') ) ]
//
// together with Hain's divisor, the quadratic form Q(A), the loop factor Δ and
// exponentials of mixed classes.

#include <map>
#include <vector>

#include "tautring/strata.hpp"
#include "tautring/weighting.hpp"

namespace tautring {

struct PixtonOptions {
  /// Shift of the r-sample window above the residue threshold.
  int window_offset = 0;
  WeightingMethod method = WeightingMethod::faulhaber;
  /// Retries with a shifted window after a ThresholdError.
  int retries = 2;
};

/// r-constant terms of the edge coefficients of one graph, keyed by the edge
/// ψ-sum power vector m (Σ m_e ≤ max_degree), signs and factorials included.
std::map<std::vector<int>, Rational> edge_constant_terms(const GraphPtr& graph, const RamificationData& data,
                                                         int max_degree, const PixtonOptions& options = {});

TautClass pixton_class(const RamificationData& data, int d, const PixtonOptions& options = {});
MixedClass pixton_mixed(const RamificationData& data, const PixtonOptions& options = {});

/// −(k²/2)κ_1 + ½ Σ_j A_j² ψ_j − ½ Σ_{g',P} (a_P − (2g'−1)k)² δ_{g'}^P, each δ once.
TautClass hain_divisor(const RamificationData& data);
/// Coefficient −½(a_P − (2g'−1)k)² of the separating divisor with side (g', P).
Rational hain_separating_coefficient(const RamificationData& data, int side_genus, const std::vector<int>& side_markings);

/// 2 × hain_divisor.
TautClass q_form(const RamificationData& data);

/// Terms on single-vertex graphs with no κ and no ψ on legs.
MixedClass irreducible_part(const MixedClass& x);
/// Δ: the irreducible part of P, computed on loop graphs directly; degrees above max_degree are zero.
MixedClass delta_factor(int g, int n, int max_degree);

/// exp of the positive-degree part; the degree-0 part must be 0 or the fundamental class.
MixedClass exp_class(const MixedClass& m);

/// x as a mixed class concentrated in its degree.
MixedClass as_mixed(const TautClass& x);

void pixton_cache_clear();

}  // namespace tautring
