#pragma once

// Intersection numbers: ψ-integrals (Witten–Kontsevich) by the DVV recursion,
// κ classes through forgotten points, evaluation of top-degree classes, and the
// intersection pairing between generators of complementary degree.

#include <string>
#include <vector>

#include "tautring/strata.hpp"

namespace tautring {

struct PsiMonomial {
  int g = 0;
  std::vector<int> exponents;
};

/// ⟨τ_{d_1}…τ_{d_n}⟩_g. Zero unless Σ d_i = 3g-3+n. Throws on unstable (g, n).
Rational psi_integral(const PsiMonomial& m);
Rational psi_integral(int g, std::vector<int> exponents);

/// ∫_{M̄_{g,n}} Π κ_{b_j} Π ψ_i^{d_i}, with κ_b = π_*(ψ_{n+1}^{b+1}).
Rational kappa_psi_integral(int g, const std::vector<int>& kappa, const std::vector<int>& psi);

/// ∫ of a top-degree class. Throws std::invalid_argument for other degrees.
Rational evaluate(const TautClass& x);
/// ∫ of one stratum: product over vertices of the local integrals.
Rational evaluate_stratum(const DecoratedStratum& s);

struct PairingMatrix {
  int g = 0, n = 0, degree = 0;
  std::vector<DecoratedStratum> rows;     // generators(g, n, degree)
  std::vector<DecoratedStratum> columns;  // generators(g, n, top - degree)
  std::vector<std::vector<Rational>> entries;
  int rank = 0;
  std::vector<int> pivot_columns;
};

/// Cached by (g, n, d).
const PairingMatrix& pairing_matrix(int g, int n, int d);

/// ⟨x, c⟩ for every complementary generator c (columns of pairing_matrix(g, n, deg x)).
std::vector<Rational> pairing_vector(const TautClass& x);

/// Persistent Witten–Kontsevich cache: "g;d1,...,dn;p/q" lines after a versioned header.
std::size_t wk_cache_size();
void wk_cache_clear();
/// Returns false (and leaves the memo untouched) when the file is missing or corrupt.
bool wk_cache_load(const std::string& path);
bool wk_cache_save(const std::string& path);
extern const char* const kWkCacheHeader;

}  // namespace tautring
