#pragma once

// Intersection product of decorated strata via generic (A, B)-structures:
//
//   [Γ_A, α]·[Γ_B, β] = Σ_Γ 1/|Aut Γ| Σ_{(φ_A, φ_B)} [Γ, φ_A*α · φ_B*β · Π_{e∈E_A∩E_B} (-ψ_h - ψ_h')]
//
// where Γ runs over stable graphs, φ_A, φ_B over contractions of Γ onto Γ_A, Γ_B
// (with identification), and every edge of Γ comes from Γ_A or Γ_B.

#include <vector>

#include "tautring/strata.hpp"

namespace tautring {

/// A contraction Γ → factor together with an identification of the result with the factor.
struct GraphMap {
  std::vector<int> vertex_map;   // Γ vertex -> factor vertex
  std::vector<int> half_source;  // factor half-edge -> Γ half-edge
};

struct CompatiblePair {
  GraphPtr target;
  std::vector<GraphMap> maps_a;
  std::vector<GraphMap> maps_b;
  std::vector<int> excess_edges;  // edges of Γ coming from both factors
};

/// All generic structures for a pair of factor graphs; memoized.
const std::vector<CompatiblePair>& compatible_pairs(const GraphPtr& a, const GraphPtr& b);

/// Every identification of the contraction of Γ keeping `keep` edges with `factor`.
std::vector<GraphMap> graph_maps(const StableGraph& gamma, const std::vector<bool>& keep, const GraphPtr& factor);

TautClass multiply_strata(const DecoratedStratum& a, const DecoratedStratum& b);
TautClass multiply(const TautClass& x, const TautClass& y);
/// Degree-by-degree product truncated at 3g-3+n.
MixedClass multiply(const MixedClass& x, const MixedClass& y);

struct Divisor {
  enum class Kind { psi, kappa1, boundary };
  Kind kind = Kind::psi;
  int marking = 0;   // for psi
  GraphPtr graph;    // for boundary: a one-edge graph

  static Divisor psi(int marking) { return {Kind::psi, marking, nullptr}; }
  static Divisor kappa1() { return {Kind::kappa1, 0, nullptr}; }
  static Divisor boundary(GraphPtr graph) { return {Kind::boundary, 0, std::move(graph)}; }
};

/// The divisor as a class; boundary divisors are reduced, (1/|Aut|)·ξ_*(1).
TautClass divisor_class(int g, int n, const Divisor& d);

/// Projection-formula shortcut for ψ_i and κ_1; boundary divisors go through multiply().
TautClass multiply_by_divisor_fast(const TautClass& x, const Divisor& d);

void product_cache_clear();

}  // namespace tautring
