#include "tautring/product.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tautring {

namespace {

using Polynomial = std::map<Monomial, Rational>;

// φ*α on Γ. ψ classes move along the half-edge identification; κ_b on a factor
// vertex pulls back to Σ_{w ↦ v} κ_b(w).
Polynomial pull_back(const Monomial& alpha, const GraphMap& map, const StableGraph& gamma) {
  Monomial base = Monomial::one(gamma);
  base.psi_legs = alpha.psi_legs;
  for (size_t h = 0; h < alpha.psi_half.size(); ++h) base.psi_half[map.half_source[h]] = alpha.psi_half[h];

  std::vector<std::pair<int, int>> kappas;  // (factor vertex, index)
  for (size_t v = 0; v < alpha.kappa.size(); ++v)
    for (int b : alpha.kappa[v]) kappas.emplace_back(static_cast<int>(v), b);

  Polynomial out;
  if (kappas.empty()) {
    out.emplace(std::move(base), 1);
    return out;
  }
  std::vector<std::vector<int>> preimage(alpha.kappa.size());
  for (int w = 0; w < gamma.num_vertices(); ++w) preimage[map.vertex_map[w]].push_back(w);

  Monomial cur = base;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == kappas.size()) {
      Monomial m = cur;
      for (auto& k : m.kappa) std::sort(k.begin(), k.end());
      out[m] += 1;
      return;
    }
    for (int w : preimage[kappas[i].first]) {
      cur.kappa[w].push_back(kappas[i].second);
      rec(i + 1);
      cur.kappa[w].pop_back();
    }
  };
  rec(0);
  return out;
}

Polynomial excess_factor(const StableGraph& gamma, const std::vector<int>& excess) {
  Polynomial out;
  out.emplace(Monomial::one(gamma), 1);
  for (int e : excess) {
    Polynomial next;
    for (const auto& [m, c] : out) {
      for (int h : {2 * e, 2 * e + 1}) {
        Monomial t = m;
        ++t.psi_half[h];
        next[t] -= c;
      }
    }
    out = std::move(next);
  }
  return out;
}

std::mutex pairs_mutex;
std::map<std::pair<std::string, std::string>, std::vector<CompatiblePair>>& pairs_table() {
  static std::map<std::pair<std::string, std::string>, std::vector<CompatiblePair>> table;
  return table;
}

std::mutex product_mutex;
std::map<std::pair<DecoratedStratum, DecoratedStratum>, TautClass>& product_table() {
  static std::map<std::pair<DecoratedStratum, DecoratedStratum>, TautClass> table;
  return table;
}

}  // namespace

namespace {

// Contraction of Γ keeping the edges in one mask, identified with its canonical graph.
struct MaskContraction {
  std::string key;
  std::vector<int> vertex;  // Γ vertex -> canonical vertex
  std::vector<int> half;    // Γ half-edge -> canonical half-edge, -1 if contracted
};

MaskContraction contract_to_canonical(const StableGraph& gamma, const std::vector<bool>& keep) {
  std::vector<bool> contract(keep.size());
  for (size_t e = 0; e < keep.size(); ++e) contract[e] = !keep[e];
  const Contraction c = contract_edges(gamma, contract);
  const Canonicalization cc = canonicalize(c.graph);
  MaskContraction out;
  out.key = encode(cc.graph);
  out.vertex.resize(gamma.num_vertices());
  for (int w = 0; w < gamma.num_vertices(); ++w) out.vertex[w] = cc.iso.vertex_map[c.vertex_map[w]];
  out.half.assign(gamma.num_half_edges(), -1);
  for (int h = 0; h < gamma.num_half_edges(); ++h)
    if (c.half_map[h] >= 0) out.half[h] = cc.iso.half_map[c.half_map[h]];
  return out;
}

std::vector<GraphMap> maps_through(const MaskContraction& mc, const GraphPtr& factor, int gamma_halves) {
  std::vector<GraphMap> out;
  for (const GraphIso& sigma : factor->automorphisms) {
    GraphMap m;
    m.vertex_map.resize(mc.vertex.size());
    for (size_t w = 0; w < mc.vertex.size(); ++w) m.vertex_map[w] = sigma.vertex_map[mc.vertex[w]];
    m.half_source.assign(factor->graph.num_half_edges(), -1);
    for (int h = 0; h < gamma_halves; ++h)
      if (mc.half[h] >= 0) m.half_source[sigma.half_map[mc.half[h]]] = h;
    out.push_back(std::move(m));
  }
  return out;
}

std::mutex contraction_mutex;
// Every edge-subset contraction of an interned graph, indexed by the kept-edge mask.
const std::vector<MaskContraction>& contractions(const GraphPtr& gamma) {
  static std::map<std::string, std::vector<MaskContraction>> table;
  {
    std::lock_guard lock(contraction_mutex);
    auto it = table.find(gamma->key);
    if (it != table.end()) return it->second;
  }
  const int e = gamma->graph.num_edges();
  std::vector<MaskContraction> all;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    std::vector<bool> keep(e);
    for (int i = 0; i < e; ++i) keep[i] = (mask >> i) & 1;
    all.push_back(contract_to_canonical(gamma->graph, keep));
  }
  std::lock_guard lock(contraction_mutex);
  return table.emplace(gamma->key, std::move(all)).first->second;
}

}  // namespace

std::vector<GraphMap> graph_maps(const StableGraph& gamma, const std::vector<bool>& keep, const GraphPtr& factor) {
  const MaskContraction mc = contract_to_canonical(gamma, keep);
  if (mc.key != factor->key) return {};
  return maps_through(mc, factor, gamma.num_half_edges());
}

const std::vector<CompatiblePair>& compatible_pairs(const GraphPtr& a, const GraphPtr& b) {
  if (a->g != b->g || a->n != b->n) throw std::invalid_argument("factors live on different moduli spaces");
  const auto key = std::make_pair(a->key, b->key);
  {
    std::lock_guard lock(pairs_mutex);
    auto it = pairs_table().find(key);
    if (it != pairs_table().end()) return it->second;
  }
  const int g = a->g, n = a->n;
  const int ma = a->graph.num_edges(), mb = b->graph.num_edges();
  std::vector<CompatiblePair> result;
  for (int e = std::max(ma, mb); e <= std::min(ma + mb, 3 * g - 3 + n); ++e) {
    for (const GraphPtr& gamma : graphs_with_edges(g, n, e)) {
      const auto& table = contractions(gamma);
      auto structures = [&](int kept, const GraphPtr& factor) {
        std::vector<std::pair<unsigned, std::vector<GraphMap>>> out;
        for (unsigned mask = 0; mask < (1u << e); ++mask) {
          if (__builtin_popcount(mask) != kept || table[mask].key != factor->key) continue;
          out.emplace_back(mask, maps_through(table[mask], factor, gamma->graph.num_half_edges()));
        }
        return out;
      };
      const auto sa = structures(ma, a);
      if (sa.empty()) continue;
      const auto sb = structures(mb, b);
      const unsigned full = (e == 0) ? 0u : ((1u << e) - 1);
      for (const auto& [mask_a, maps_a] : sa)
        for (const auto& [mask_b, maps_b] : sb) {
          if ((mask_a | mask_b) != full) continue;
          CompatiblePair p;
          p.target = gamma;
          p.maps_a = maps_a;
          p.maps_b = maps_b;
          for (int i = 0; i < e; ++i)
            if (((mask_a & mask_b) >> i) & 1) p.excess_edges.push_back(i);
          result.push_back(std::move(p));
        }
    }
  }
  std::lock_guard lock(pairs_mutex);
  auto [it, inserted] = pairs_table().emplace(key, std::move(result));
  return it->second;
}

TautClass multiply_strata(const DecoratedStratum& a, const DecoratedStratum& b) {
  const int g = a.graph->g, n = a.graph->n;
  if (b.graph->g != g || b.graph->n != n) throw std::invalid_argument("factors live on different moduli spaces");
  const int degree = a.codim() + b.codim();
  TautClass out(g, n, degree);
  if (degree > 3 * g - 3 + n) return out;
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard lock(product_mutex);
    auto it = product_table().find(key);
    if (it != product_table().end()) return it->second;
  }
  for (const CompatiblePair& p : compatible_pairs(a.graph, b.graph)) {
    const StableGraph& gamma = p.target->graph;
    const Rational weight(1, p.target->aut_count());
    const Polynomial excess = excess_factor(gamma, p.excess_edges);
    std::vector<Polynomial> pulled_b;
    for (const GraphMap& mb : p.maps_b) pulled_b.push_back(pull_back(b.decoration, mb, gamma));
    Polynomial total;
    for (const GraphMap& ma : p.maps_a) {
      const Polynomial pa = pull_back(a.decoration, ma, gamma);
      for (const Polynomial& pb : pulled_b)
        for (const auto& [x, cx] : pa)
          for (const auto& [y, cy] : pb) {
            const Monomial xy = x * y;
            for (const auto& [z, cz] : excess) total[xy * z] += cx * cy * cz;
          }
    }
    for (const auto& [m, c] : total) {
      if (c == 0 || exceeds_vertex_dimension(*p.target, m)) continue;
      out.add(canonical_stratum(p.target, m), c * weight);
    }
  }
  std::lock_guard lock(product_mutex);
  product_table().emplace(key, out);
  return out;
}

TautClass multiply(const TautClass& x, const TautClass& y) {
  if (x.g() != y.g() || x.n() != y.n()) throw std::invalid_argument("factors live on different moduli spaces");
  TautClass out(x.g(), x.n(), x.degree() + y.degree());
  if (out.degree() > 3 * x.g() - 3 + x.n()) return out;
  for (const auto& [sa, ca] : x.terms())
    for (const auto& [sb, cb] : y.terms()) {
      const TautClass p = multiply_strata(sa, sb);
      const Rational c = ca * cb;
      for (const auto& [s, k] : p.terms()) out.add(s, c * k);
    }
  return out;
}

MixedClass multiply(const MixedClass& x, const MixedClass& y) {
  if (x.g() != y.g() || x.n() != y.n()) throw std::invalid_argument("factors live on different moduli spaces");
  MixedClass out(x.g(), x.n());
  const int top = out.top_degree();
  for (int i = 0; i <= top; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= top; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += multiply(x[i], y[j]);
    }
  }
  return out;
}

TautClass divisor_class(int g, int n, const Divisor& d) {
  switch (d.kind) {
    case Divisor::Kind::psi:
      return psi_class(g, n, d.marking);
    case Divisor::Kind::kappa1:
      return kappa_class(g, n, 1);
    case Divisor::Kind::boundary:
      if (!d.graph || d.graph->g != g || d.graph->n != n) throw std::invalid_argument("boundary graph of wrong type");
      return boundary_divisor(d.graph);
  }
  throw std::invalid_argument("unsupported divisor kind");
}

TautClass multiply_by_divisor_fast(const TautClass& x, const Divisor& d) {
  TautClass out(x.g(), x.n(), x.degree() + 1);
  if (out.degree() > 3 * x.g() - 3 + x.n()) return out;
  switch (d.kind) {
    case Divisor::Kind::psi:
      if (d.marking < 1 || d.marking > x.n()) throw std::invalid_argument("marking out of range");
      for (const auto& [s, c] : x.terms()) {
        Monomial m = s.decoration;
        ++m.psi_legs[d.marking - 1];
        out.add(canonical_stratum(s.graph, m), c);
      }
      return out;
    case Divisor::Kind::kappa1:
      for (const auto& [s, c] : x.terms())
        for (int v = 0; v < s.graph->graph.num_vertices(); ++v) {
          Monomial m = s.decoration;
          m.kappa[v].push_back(1);
          std::sort(m.kappa[v].begin(), m.kappa[v].end());
          out.add(canonical_stratum(s.graph, m), c);
        }
      return out;
    case Divisor::Kind::boundary:
      return multiply(x, divisor_class(x.g(), x.n(), d));
  }
  throw std::invalid_argument("unsupported divisor kind");
}

void product_cache_clear() {
  {
    std::lock_guard lock(product_mutex);
    product_table().clear();
  }
  std::lock_guard lock(pairs_mutex);
  pairs_table().clear();
}

}  // namespace tautring
