#include "tautring/weighting.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tautring/strata.hpp"

namespace tautring {

RamificationData RamificationData::from_A(int g, int k, std::vector<int> A) {
  RamificationData d;
  d.g = g;
  d.n = static_cast<int>(A.size());
  d.k = k;
  d.A = std::move(A);
  if (g < 0 || 2 * g - 2 + d.n <= 0) throw std::invalid_argument("unstable (g, n)");
  const long sum = std::accumulate(d.A.begin(), d.A.end(), 0L);
  if (sum != static_cast<long>(k) * (2 * g - 2 + d.n))
    throw std::invalid_argument("sum of A must equal k(2g-2+n) = " + std::to_string(k * (2 * g - 2 + d.n)));
  return d;
}

RamificationData RamificationData::from_a(int g, int k, const std::vector<int>& a) {
  const long sum = std::accumulate(a.begin(), a.end(), 0L);
  if (sum != static_cast<long>(k) * (2 * g - 2))
    throw std::invalid_argument("sum of a must equal k(2g-2) = " + std::to_string(k * (2 * g - 2)));
  std::vector<int> A(a);
  for (int& x : A) x += k;
  return from_A(g, k, std::move(A));
}

std::vector<int> RamificationData::a() const {
  std::vector<int> out(A);
  for (int& x : out) x -= k;
  return out;
}

RamificationData RamificationData::operator+(const RamificationData& o) const {
  if (g != o.g || n != o.n) throw std::invalid_argument("ramification data of different types");
  std::vector<int> sum(A);
  for (int i = 0; i < n; ++i) sum[i] += o.A[i];
  return from_A(g, k + o.k, std::move(sum));
}

std::string RamificationData::describe() const {
  std::ostringstream os;
  os << "g=" << g << " n=" << n << " k=" << k << " A=(";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << A[i];
  os << ")";
  return os.str();
}

int residue_threshold(const RamificationData& data) {
  int s = 0;
  for (int x : data.A) s += std::abs(x);
  return 2 * (s + std::abs(data.k) * (2 * data.g - 2 + data.n)) + 3;
}

WeightingProblem WeightingProblem::make(const GraphPtr& graph, const RamificationData& data, int r) {
  if (graph->g != data.g || graph->n != data.n) throw std::invalid_argument("graph and data of different types");
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  WeightingProblem p;
  p.graph = graph;
  p.leg_targets = data.A;
  p.r = r;
  const StableGraph& gr = graph->graph;
  for (int v = 0; v < gr.num_vertices(); ++v)
    p.vertex_targets.push_back(data.k * (2 * gr.genera[v] - 2 + gr.valence(v)));
  return p;
}

namespace {

long mod(long x, long r) {
  x %= r;
  return x < 0 ? x + r : x;
}

// w_e = (constant + Σ_j coef[j] x_j) mod r over free variables x_j.
struct Affine {
  long constant = 0;
  std::vector<int> coef;
};

struct Propagation {
  bool consistent = true;
  std::vector<Affine> edges;
  int free_count = 0;
};

Propagation propagate(const WeightingProblem& p) {
  const StableGraph& gr = p.graph->graph;
  const int V = gr.num_vertices(), E = gr.num_edges();
  std::vector<int> parent_edge(V, -1), order;
  std::vector<bool> seen(V, false), tree(E, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int e = 0; e < E; ++e) {
      if (gr.is_loop(e)) continue;
      const auto [a, b] = gr.edges[e];
      if (a != v && b != v) continue;
      const int u = (a == v) ? b : a;
      if (seen[u]) continue;
      seen[u] = true;
      tree[e] = true;
      parent_edge[u] = e;
      queue.push_back(u);
    }
  }

  Propagation out;
  std::vector<int> free_index(E, -1);
  for (int e = 0; e < E; ++e)
    if (!tree[e]) free_index[e] = out.free_count++;
  out.edges.assign(E, Affine{0, std::vector<int>(out.free_count, 0)});
  for (int e = 0; e < E; ++e)
    if (!tree[e]) out.edges[e].coef[free_index[e]] = 1;

  // Residual at v: target - legs - Σ_{known halves at v} w(h), as an affine form.
  auto residual = [&](int v, int skip_edge) {
    Affine a{p.vertex_targets[v], std::vector<int>(out.free_count, 0)};
    for (int m : gr.legs[v]) a.constant -= p.leg_targets[m - 1];
    for (int e = 0; e < E; ++e) {
      if (e == skip_edge || gr.is_loop(e)) continue;
      int sign = 0;
      if (gr.edges[e].first == v) sign = 1;
      else if (gr.edges[e].second == v) sign = -1;
      if (!sign) continue;
      a.constant -= sign * out.edges[e].constant;
      for (int j = 0; j < out.free_count; ++j) a.coef[j] -= sign * out.edges[e].coef[j];
    }
    return a;
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent_edge[v] < 0) continue;
    const int e = parent_edge[v];
    const int sign = (gr.edges[e].first == v) ? 1 : -1;
    Affine a = residual(v, e);
    a.constant *= sign;
    for (int& c : a.coef) c *= sign;
    out.edges[e] = std::move(a);
  }

  const Affine root = residual(order.front(), -1);
  for (int c : root.coef)
    if (c != 0) throw std::logic_error("weighting propagation left a free variable at the root");
  out.consistent = mod(root.constant, p.r) == 0;
  return out;
}

Integer edge_product(const std::vector<long>& w, const std::vector<int>& powers, long r) {
  Integer prod = 1;
  for (size_t e = 0; e < w.size(); ++e) {
    if (powers[e] == 0) continue;
    Integer f = w[e] * (r - w[e]);
    if (f == 0) return 0;
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), f.get_mpz_t(), powers[e]);
    prod *= t;
  }
  return prod;
}

// Enumerates the first `count` free variables, calling visit(values).
void for_each_assignment(int count, long r, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> x(count, 0);
  while (true) {
    visit(x);
    int i = 0;
    while (i < count && ++x[i] == r) x[i++] = 0;
    if (i == count) return;
  }
}

using IntPoly = std::vector<Integer>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> bernoulli_plus(int upto) {
  static std::mutex m;
  static std::vector<Rational> b{1};
  std::lock_guard lock(m);
  while (static_cast<int>(b.size()) <= upto) {
    const int k = static_cast<int>(b.size());
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * (j == 1 ? Rational(-1, 2) : b[j]);
    Rational bk = -s / (k + 1);
    if (k == 1) bk = Rational(1, 2);
    b.push_back(bk);
  }
  return b;
}

Rational sum_faulhaber(const WeightingProblem& p, const Propagation& prop, const std::vector<int>& powers) {
  const long r = p.r;
  const int F = prop.free_count;
  const int E = static_cast<int>(prop.edges.size());
  if (F == 0) {
    std::vector<long> w(E);
    for (int e = 0; e < E; ++e) w[e] = mod(prop.edges[e].constant, r);
    return Rational(edge_product(w, powers, r));
  }
  Rational acc = 0;
  for_each_assignment(F - 1, r, [&](const std::vector<long>& x) {
    std::vector<long> c(E);
    std::vector<int> eps(E);
    std::vector<long> cuts{0, r};
    for (int e = 0; e < E; ++e) {
      long v = prop.edges[e].constant;
      for (int j = 0; j < F - 1; ++j) v += prop.edges[e].coef[j] * x[j];
      c[e] = mod(v, r);
      eps[e] = prop.edges[e].coef[F - 1];
      if (std::abs(eps[e]) > 1) throw std::logic_error("cycle coefficient outside {-1,0,1}");
      if (powers[e] == 0) continue;
      if (eps[e] == 1 && c[e] > 0) cuts.push_back(r - c[e]);
      if (eps[e] == -1 && c[e] + 1 < r) cuts.push_back(c[e] + 1);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      const long lo = cuts[i], hi = cuts[i + 1];
      IntPoly poly{1};
      for (int e = 0; e < E; ++e) {
        if (powers[e] == 0) continue;
        // ℓ(x) = alpha + eps·x on [lo, hi)
        long alpha = c[e];
        if (eps[e] == 1 && c[e] + lo >= r) alpha -= r;
        if (eps[e] == -1 && c[e] - lo < 0) alpha += r;
        // f = ℓ(r - ℓ) = alpha(r - alpha) + eps(r - 2alpha)x - x²
        IntPoly f{Integer(alpha) * (r - alpha), Integer(eps[e]) * (r - 2 * alpha), Integer(eps[e] != 0 ? -1 : 0)};
        for (int t = 0; t < powers[e]; ++t) poly = poly_mul(poly, f);
      }
      for (size_t a = 0; a < poly.size(); ++a) {
        if (poly[a] == 0) continue;
        acc += Rational(poly[a]) * (power_sum(static_cast<int>(a), hi - 1) - power_sum(static_cast<int>(a), lo - 1));
      }
    }
  });
  return acc;
}

Rational sum_direct(const WeightingProblem& p, const Propagation& prop, const std::vector<int>& powers) {
  const long r = p.r;
  const int E = static_cast<int>(prop.edges.size());
  Integer total = 0;
  for_each_assignment(prop.free_count, r, [&](const std::vector<long>& x) {
    std::vector<long> w(E);
    for (int e = 0; e < E; ++e) {
      long v = prop.edges[e].constant;
      for (int j = 0; j < prop.free_count; ++j) v += prop.edges[e].coef[j] * x[j];
      w[e] = mod(v, r);
    }
    total += edge_product(w, powers, r);
  });
  return Rational(total);
}

}  // namespace

Rational power_sum(int p, const Integer& n) {
  if (n < 0) return 0;
  if (p == 0) return Rational(n + 1);
  const auto b = bernoulli_plus(p);
  Rational s = 0;
  Integer npow = 1;
  // Σ_{j=0}^{p} C(p+1, j) B⁺_j n^{p+1-j}, accumulated from j = p down to 0.
  for (int j = p; j >= 0; --j) {
    npow *= n;
    s += Rational(binomial(p + 1, j)) * b[j] * Rational(npow);
  }
  return s / (p + 1);
}

std::vector<std::vector<int>> admissible_weightings(const WeightingProblem& p) {
  const Propagation prop = propagate(p);
  std::vector<std::vector<int>> out;
  if (!prop.consistent) return out;
  const int E = static_cast<int>(prop.edges.size());
  for_each_assignment(prop.free_count, p.r, [&](const std::vector<long>& x) {
    std::vector<int> w(E);
    for (int e = 0; e < E; ++e) {
      long v = prop.edges[e].constant;
      for (int j = 0; j < prop.free_count; ++j) v += prop.edges[e].coef[j] * x[j];
      w[e] = static_cast<int>(mod(v, p.r));
    }
    out.push_back(std::move(w));
  });
  return out;
}

Rational weighting_sum(const WeightingProblem& p, const std::vector<int>& powers, WeightingMethod method) {
  if (static_cast<int>(powers.size()) != p.graph->graph.num_edges())
    throw std::invalid_argument("one power per edge expected");
  const Propagation prop = propagate(p);
  if (!prop.consistent) return 0;
  Rational s = (method == WeightingMethod::direct) ? sum_direct(p, prop, powers) : sum_faulhaber(p, prop, powers);
  return s / pow(Rational(p.r), prop.free_count);
}

std::map<std::vector<int>, Rational> weighting_coefficients(const WeightingProblem& p, int max_degree,
                                                            WeightingMethod method) {
  const int E = p.graph->graph.num_edges();
  std::map<std::vector<int>, Rational> out;
  for (int total = 0; total <= max_degree; ++total)
    for (const auto& m : compositions(total, E)) {
      std::vector<int> powers(E);
      Rational c = 1;
      for (int e = 0; e < E; ++e) {
        powers[e] = m[e] + 1;
        c /= Rational(factorial(m[e] + 1));
        if (m[e] % 2) c = -c;
      }
      out[m] = c * weighting_sum(p, powers, method);
    }
  return out;
}

int RPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

Rational RPolynomial::operator()(const Rational& r) const {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r + *it;
  return v;
}

RPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const int m = degree_bound + 1;
  if (static_cast<int>(samples.size()) < m) throw std::invalid_argument("too few samples for the degree bound");
  // Newton divided differences.
  std::vector<Rational> x(m), dd(m);
  for (int i = 0; i < m; ++i) {
    x[i] = samples[i].first;
    dd[i] = samples[i].second;
  }
  for (int j = 1; j < m; ++j)
    for (int i = m - 1; i >= j; --i) {
      if (x[i] == x[i - j]) throw std::invalid_argument("repeated sample point");
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
    }
  RPolynomial poly;
  poly.coeffs.assign(m, 0);
  std::vector<Rational> basis{1};  // Π_{i<j} (r - x_i)
  for (int j = 0; j < m; ++j) {
    for (size_t t = 0; t < basis.size(); ++t) poly.coeffs[t] += dd[j] * basis[t];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (size_t t = 0; t < basis.size(); ++t) {
      next[t + 1] += basis[t];
      next[t] -= x[j] * basis[t];
    }
    basis = std::move(next);
  }
  for (size_t i = m; i < samples.size(); ++i) {
    const Rational v = poly(samples[i].first);
    if (v != samples[i].second)
      throw ThresholdError("surplus sample at r=" + to_string(samples[i].first) + " gives " +
                           to_string(samples[i].second) + " but the interpolant predicts " + to_string(v));
  }
  return poly;
}

Rational interpolate_constant_term(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound) {
  return interpolate(samples, degree_bound).constant_term();
}

}  // namespace tautring
