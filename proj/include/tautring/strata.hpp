#pragma once

// Decorated strata and tautological classes.
//
// A DecoratedStratum [Γ, m] denotes the pushforward of the monomial m along the
// gluing map of Γ, with no 1/|Aut Γ| factor. Any automorphism normalisation
// is carried by explicit coefficients.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautring/graphs.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Monomial in ψ and κ classes on the vertex moduli spaces of a fixed graph.
struct Monomial {
  std::vector<int> psi_legs;            // index marking-1
  std::vector<int> psi_half;            // per half-edge
  std::vector<std::vector<int>> kappa;  // per vertex, sorted multiset of κ indices

  static Monomial one(const StableGraph& graph);
  int degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Product of monomials on the same graph.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Local decoration degree at v (ψ on legs and half-edges at v plus κ weight).
int local_degree(const GraphInfo& info, const Monomial& m, int v);
/// True when some vertex carries more than 3g(v)-3+n(v) degrees (the class vanishes).
bool exceeds_vertex_dimension(const GraphInfo& info, const Monomial& m);

struct DecoratedStratum {
  GraphPtr graph;
  Monomial decoration;

  int codim() const { return graph->graph.num_edges() + decoration.degree(); }
  std::string describe() const;

  bool operator==(const DecoratedStratum& o) const {
    return graph->key == o.graph->key && decoration == o.decoration;
  }
  bool operator<(const DecoratedStratum& o) const {
    if (graph->key != o.graph->key) return graph->key < o.graph->key;
    return decoration < o.decoration;
  }
};

/// Canonical representative of [graph, m]: the decoration is minimised over Aut(graph).
/// `graph` must be interned (canonical).
DecoratedStratum canonical_stratum(const GraphPtr& graph, const Monomial& m);
/// Same for an arbitrary labelling of a stable graph.
DecoratedStratum make_stratum(const StableGraph& graph, const Monomial& m);

/// Linear combination of decorated strata of one codimension on M̄_{g,n}.
class TautClass {
 public:
  TautClass() = default;
  TautClass(int g, int n, int degree) : g_(g), n_(n), degree_(degree) {}

  /// [1] on M̄_{g,n}.
  static TautClass fundamental(int g, int n);
  static TautClass from_stratum(const DecoratedStratum& s, const Rational& coeff = 1);

  int g() const { return g_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<DecoratedStratum, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const DecoratedStratum& s) const;

  /// Adds coeff·s; s must already be canonical. Strata vanishing for dimension reasons are dropped.
  void add(const DecoratedStratum& s, const Rational& coeff);

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  TautClass& operator*=(const Rational& c);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator*(const Rational& c, TautClass a) { return a *= c; }
  bool operator==(const TautClass& o) const;

 private:
  void check_compatible(const TautClass& o) const;

  int g_ = 0, n_ = 0, degree_ = 0;
  std::map<DecoratedStratum, Rational> terms_;
};

/// Σ c_i X_i; all inputs must share (g, n, degree). Throws std::invalid_argument otherwise.
TautClass combine(const std::vector<std::pair<Rational, TautClass>>& pairs);

/// Graded class with one component per codimension 0..3g-3+n.
class MixedClass {
 public:
  MixedClass() = default;
  MixedClass(int g, int n);

  int g() const { return g_; }
  int n() const { return n_; }
  int top_degree() const { return static_cast<int>(parts_.size()) - 1; }
  const TautClass& operator[](int d) const { return parts_.at(d); }
  TautClass& operator[](int d) { return parts_.at(d); }

  MixedClass& operator+=(const MixedClass& o);
  MixedClass& operator-=(const MixedClass& o);
  MixedClass& operator*=(const Rational& c);
  friend MixedClass operator-(MixedClass a, const MixedClass& b) { return a -= b; }

 private:
  int g_ = 0, n_ = 0;
  std::vector<TautClass> parts_;
};

/// Every canonical decorated stratum of codimension d that respects the
/// per-vertex dimension bound, sorted.
std::vector<DecoratedStratum> generators(int g, int n, int d);

/// Common single-term classes.
TautClass psi_class(int g, int n, int marking);
TautClass kappa_class(int g, int n, int index);
/// Undecorated stratum class ξ_Γ*(1) (no automorphism factor).
TautClass stratum_class(const GraphPtr& graph);
/// The boundary divisor of a one-edge graph as a reduced divisor: (1/|Aut Γ|)·ξ_Γ*(1).
TautClass boundary_divisor(const GraphPtr& graph);
/// Separating divisor δ_{g'}^P with one side of genus g' carrying markings P.
GraphPtr separating_graph(int g, int n, int side_genus, const std::vector<int>& side_markings);
/// Graph of δ_irr: one vertex of genus g-1 with a loop.
GraphPtr irreducible_graph(int g, int n);

/// Integer partitions of `total` into positive parts, each sorted ascending.
std::vector<std::vector<int>> integer_partitions(int total);
/// Ordered ways to write `total` as a sum of `parts` non-negative integers.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace tautring
