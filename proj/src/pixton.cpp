#include "tautring/pixton.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "tautring/product.hpp"

namespace tautring {

namespace {

using TermKey = std::tuple<std::string, std::vector<int>, int, std::vector<int>, int, int>;

std::mutex term_mutex;
std::map<TermKey, Rational>& term_table() {
  static std::map<TermKey, Rational> table;
  return table;
}

std::mutex class_mutex;
std::map<std::tuple<std::vector<int>, int, int, int, int, int>, TautClass>& class_table() {
  static std::map<std::tuple<std::vector<int>, int, int, int, int, int>, TautClass> table;
  return table;
}

Rational constant_term(const GraphPtr& graph, const RamificationData& data, const std::vector<int>& m,
                       const PixtonOptions& options) {
  const TermKey key{graph->key, data.A, data.k, m, options.window_offset, static_cast<int>(options.method)};
  {
    std::lock_guard lock(term_mutex);
    auto it = term_table().find(key);
    if (it != term_table().end()) return it->second;
  }
  const int E = graph->graph.num_edges();
  std::vector<int> powers(E);
  Rational scale = 1;
  int bound = graph->graph.h1() + 2;
  for (int e = 0; e < E; ++e) {
    powers[e] = m[e] + 1;
    bound += 2 * (m[e] + 1);
    scale /= Rational(factorial(m[e] + 1));
    if (m[e] % 2) scale = -scale;
  }
  const int r0 = residue_threshold(data);
  int offset = options.window_offset;
  Rational value;
  for (int attempt = 0;; ++attempt) {
    std::vector<std::pair<Rational, Rational>> samples;
    for (int i = 0; i < bound + 3; ++i) {
      const int r = r0 + 1 + offset + i;
      samples.emplace_back(r, weighting_sum(WeightingProblem::make(graph, data, r), powers, options.method));
    }
    try {
      value = scale * interpolate_constant_term(samples, bound);
      break;
    } catch (const ThresholdError& err) {
      if (attempt >= options.retries)
        throw ThresholdError(std::string(err.what()) + " on graph " + graph->key + " for " + data.describe());
      offset += bound + 3;
    }
  }
  std::lock_guard lock(term_mutex);
  term_table().emplace(key, value);
  return value;
}

// Adds coeff · Π_e (ψ_{2e} + ψ_{2e+1})^{m_e} · base to out.
void add_edge_expansion(TautClass& out, const GraphPtr& graph, Monomial base, const std::vector<int>& m,
                        const Rational& coeff) {
  const int E = static_cast<int>(m.size());
  std::function<void(int, Rational)> rec = [&](int e, Rational c) {
    if (e == E) {
      if (!exceeds_vertex_dimension(*graph, base)) out.add(canonical_stratum(graph, base), c);
      return;
    }
    for (int j = 0; j <= m[e]; ++j) {
      base.psi_half[2 * e] += j;
      base.psi_half[2 * e + 1] += m[e] - j;
      rec(e + 1, c * Rational(binomial(m[e], j)));
      base.psi_half[2 * e] -= j;
      base.psi_half[2 * e + 1] -= m[e] - j;
    }
  };
  rec(0, coeff);
}

}  // namespace

std::map<std::vector<int>, Rational> edge_constant_terms(const GraphPtr& graph, const RamificationData& data,
                                                         int max_degree, const PixtonOptions& options) {
  std::map<std::vector<int>, Rational> out;
  const int E = graph->graph.num_edges();
  for (int s = 0; s <= max_degree; ++s)
    for (const auto& m : compositions(s, E)) out[m] = constant_term(graph, data, m, options);
  return out;
}

TautClass pixton_class(const RamificationData& data, int d, const PixtonOptions& options) {
  const int g = data.g, n = data.n;
  const int top = 3 * g - 3 + n;
  TautClass out(g, n, d);
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d > top) return out;
  const auto key = std::make_tuple(data.A, data.g, data.k, d, options.window_offset, static_cast<int>(options.method));
  {
    std::lock_guard lock(class_mutex);
    auto it = class_table().find(key);
    if (it != class_table().end()) return it->second;
  }
  const Rational k2 = Rational(data.k) * data.k;
  for (int e = 0; e <= d; ++e) {
    for (const GraphPtr& graph : graphs_with_edges(g, n, e)) {
      const StableGraph& gr = graph->graph;
      const int V = gr.num_vertices();
      const Rational aut(1, graph->aut_count());
      for (const auto& [m, t] : edge_constant_terms(graph, data, d - e, options)) {
        if (t == 0) continue;
        int s = 0;
        for (int x : m) s += x;
        for (const auto& dist : compositions(d - e - s, n + V)) {
          Rational c = aut * t;
          Monomial base = Monomial::one(gr);
          for (int i = 0; i < n && c != 0; ++i) {
            const int p = dist[i];
            if (p == 0) continue;
            c *= pow(Rational(data.A[i]) * data.A[i], p) / Rational(factorial(p));
            base.psi_legs[i] = p;
          }
          for (int v = 0; v < V && c != 0; ++v) {
            const int q = dist[n + v];
            if (q == 0) continue;
            c *= pow(-k2, q) / Rational(factorial(q));
            base.kappa[v].assign(q, 1);
          }
          if (c == 0 || exceeds_vertex_dimension(*graph, base)) continue;
          add_edge_expansion(out, graph, base, m, c);
        }
      }
    }
  }
  std::lock_guard lock(class_mutex);
  class_table().emplace(key, out);
  return out;
}

MixedClass pixton_mixed(const RamificationData& data, const PixtonOptions& options) {
  MixedClass out(data.g, data.n);
  for (int d = 0; d <= out.top_degree(); ++d) out[d] = pixton_class(data, d, options);
  return out;
}

Rational hain_separating_coefficient(const RamificationData& data, int side_genus, const std::vector<int>& side_markings) {
  long a_p = 0;
  const auto a = data.a();
  for (int i : side_markings) a_p += a.at(i - 1);
  const long u = a_p - static_cast<long>(2 * side_genus - 1) * data.k;
  return ratio(-u * u, 2);
}

TautClass hain_divisor(const RamificationData& data) {
  const int g = data.g, n = data.n;
  TautClass out(g, n, 1);
  if (3 * g - 3 + n < 1) return out;
  out += ratio(-data.k * data.k, 2) * kappa_class(g, n, 1);
  for (int j = 1; j <= n; ++j) out += ratio(data.A[j - 1] * data.A[j - 1], 2) * psi_class(g, n, j);
  for (const GraphPtr& graph : graphs_with_edges(g, n, 1)) {
    if (graph->graph.is_loop(0)) continue;
    std::vector<int> side = graph->graph.legs[0];
    out += hain_separating_coefficient(data, graph->graph.genera[0], side) * boundary_divisor(graph);
  }
  return out;
}

TautClass q_form(const RamificationData& data) { return Rational(2) * hain_divisor(data); }

MixedClass irreducible_part(const MixedClass& x) {
  MixedClass out(x.g(), x.n());
  for (int d = 0; d <= x.top_degree(); ++d)
    for (const auto& [s, c] : x[d].terms()) {
      if (s.graph->graph.num_vertices() != 1) continue;
      if (!s.decoration.kappa[0].empty()) continue;
      bool leg_psi = false;
      for (int p : s.decoration.psi_legs) leg_psi |= (p != 0);
      if (!leg_psi) out[d].add(s, c);
    }
  return out;
}

MixedClass delta_factor(int g, int n, int max_degree) {
  const RamificationData zero = RamificationData::from_A(g, 0, std::vector<int>(n, 0));
  MixedClass out(g, n);
  for (int d = 0; d <= std::min(max_degree, out.top_degree()); ++d)
    for (int e = 0; e <= d; ++e)
      for (const GraphPtr& graph : graphs_with_edges(g, n, e)) {
        if (graph->graph.num_vertices() != 1) continue;
        const Rational aut(1, graph->aut_count());
        for (const auto& m : compositions(d - e, e)) {
          const Rational t = constant_term(graph, zero, m, {});
          if (t != 0) add_edge_expansion(out[d], graph, Monomial::one(graph->graph), m, aut * t);
        }
      }
  return out;
}

MixedClass as_mixed(const TautClass& x) {
  MixedClass out(x.g(), x.n());
  if (x.degree() <= out.top_degree()) out[x.degree()] = x;
  return out;
}

MixedClass exp_class(const MixedClass& m) {
  const int g = m.g(), n = m.n();
  const TautClass one = TautClass::fundamental(g, n);
  if (!m[0].is_zero() && !(m[0] == one))
    throw std::invalid_argument("exp_class: degree-0 part must be 0 or the fundamental class");
  MixedClass x = m;
  x[0] = TautClass(g, n, 0);
  MixedClass result = as_mixed(one);
  MixedClass term = result;
  for (int j = 1; j <= result.top_degree(); ++j) {
    term = multiply(term, x);
    term *= Rational(1, j);
    result += term;
  }
  return result;
}

void pixton_cache_clear() {
  {
    std::lock_guard lock(term_mutex);
    term_table().clear();
  }
  std::lock_guard lock(class_mutex);
  class_table().clear();
}

}  // namespace tautring
