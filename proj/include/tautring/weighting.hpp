#pragma once

// Weightings mod r on stable graphs and the r-constant-term machinery.
//
// For a graph Γ, residues A_i on legs and twist k, an admissible weighting mod r
// assigns w(h) ∈ {0..r-1} to every half-edge with w(h)+w(h') ≡ 0 on edges and
// Σ_{h at v} w(h) ≡ k(2g(v)-2+n(v)) at vertices (legs count with weight A_i).
// Edge e is recorded through w_e = w(2e); then w(2e)·w(2e+1) = w_e(r - w_e).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/graphs.hpp"
#include "tautring/rational.hpp"

namespace tautring {

struct RamificationData {
  int g = 0, n = 0, k = 0;
  std::vector<int> A;

  /// Throws std::invalid_argument unless Σ A_i = k(2g-2+n) and 2g-2+n > 0.
  static RamificationData from_A(int g, int k, std::vector<int> A);
  /// A_i = a_i + k; requires Σ a_i = k(2g-2).
  static RamificationData from_a(int g, int k, const std::vector<int>& a);
  std::vector<int> a() const;
  /// Data with A + B and k + k'.
  RamificationData operator+(const RamificationData& o) const;
  std::string describe() const;
  bool operator==(const RamificationData&) const = default;
};

/// r₀ = 2(Σ|A_i| + |k|(2g-2+n)) + 3.
int residue_threshold(const RamificationData& data);

struct WeightingProblem {
  GraphPtr graph;
  std::vector<int> leg_targets;     // A_i, index marking-1
  std::vector<int> vertex_targets;  // k(2g(v)-2+n(v))
  int r = 0;

  static WeightingProblem make(const GraphPtr& graph, const RamificationData& data, int r);
};

/// Every admissible weighting as the list of edge weights w_e = w(2e).
std::vector<std::vector<int>> admissible_weightings(const WeightingProblem& p);

enum class WeightingMethod { faulhaber, direct };

/// r^{-h¹} Σ_w Π_e (w_e (r - w_e))^{powers[e]} over admissible weightings.
Rational weighting_sum(const WeightingProblem& p, const std::vector<int>& powers,
                       WeightingMethod method = WeightingMethod::faulhaber);

/// Per-decoration edge coefficients: for each edge ψ-sum power vector m with
/// Σ m_e ≤ max_degree, r^{-h¹} Σ_w Π_e (-1)^{m_e} (w_e(r-w_e))^{m_e+1} / (m_e+1)!.
std::map<std::vector<int>, Rational> weighting_coefficients(const WeightingProblem& p, int max_degree,
                                                            WeightingMethod method = WeightingMethod::faulhaber);

/// Σ_{x=0}^{n} x^p (0^0 = 1); zero for n < 0.
Rational power_sum(int p, const Integer& n);

/// Dense polynomial in r over Q, lowest coefficient first.
struct RPolynomial {
  std::vector<Rational> coeffs;

  int degree() const;
  Rational operator()(const Rational& r) const;
  Rational constant_term() const { return coeffs.empty() ? Rational(0) : coeffs[0]; }
};

class ThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact interpolation through the first degree_bound+1 samples; every further
/// sample must lie on the interpolant, otherwise ThresholdError.
RPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound);
Rational interpolate_constant_term(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound);

}  // namespace tautring
