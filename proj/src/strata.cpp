#include "tautring/strata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautring {

Monomial Monomial::one(const StableGraph& graph) {
  Monomial m;
  m.psi_legs.assign(graph.num_markings(), 0);
  m.psi_half.assign(graph.num_half_edges(), 0);
  m.kappa.assign(graph.num_vertices(), {});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int x : psi_legs) d += x;
  for (int x : psi_half) d += x;
  for (const auto& k : kappa)
    for (int x : k) d += x;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.psi_legs.size(); ++i) r.psi_legs[i] += b.psi_legs[i];
  for (size_t i = 0; i < r.psi_half.size(); ++i) r.psi_half[i] += b.psi_half[i];
  for (size_t v = 0; v < r.kappa.size(); ++v) {
    if (b.kappa[v].empty()) continue;
    r.kappa[v].insert(r.kappa[v].end(), b.kappa[v].begin(), b.kappa[v].end());
    std::sort(r.kappa[v].begin(), r.kappa[v].end());
  }
  return r;
}

int local_degree(const GraphInfo& info, const Monomial& m, int v) {
  int d = 0;
  for (int k : m.kappa[v]) d += k;
  for (int marking : info.graph.legs[v]) d += m.psi_legs[marking - 1];
  for (size_t h = 0; h < m.psi_half.size(); ++h)
    if (info.half_vertex[h] == v) d += m.psi_half[h];
  return d;
}

bool exceeds_vertex_dimension(const GraphInfo& info, const Monomial& m) {
  for (int v = 0; v < info.graph.num_vertices(); ++v)
    if (local_degree(info, m, v) > info.vertex_dimension(v)) return true;
  return false;
}

std::string DecoratedStratum::describe() const {
  std::ostringstream os;
  os << graph->key;
  bool any = false;
  for (size_t i = 0; i < decoration.psi_legs.size(); ++i)
    if (decoration.psi_legs[i]) {
      os << (any ? "," : " psi{") << (i + 1) << ':' << decoration.psi_legs[i];
      any = true;
    }
  for (size_t h = 0; h < decoration.psi_half.size(); ++h)
    if (decoration.psi_half[h]) {
      os << (any ? "," : " psi{") << 'h' << h << ':' << decoration.psi_half[h];
      any = true;
    }
  if (any) os << '}';
  any = false;
  for (size_t v = 0; v < decoration.kappa.size(); ++v)
    if (!decoration.kappa[v].empty()) {
      os << (any ? "," : " kappa{") << v << ":[";
      for (size_t j = 0; j < decoration.kappa[v].size(); ++j) os << (j ? "," : "") << decoration.kappa[v][j];
      os << ']';
      any = true;
    }
  if (any) os << '}';
  return os.str();
}

DecoratedStratum canonical_stratum(const GraphPtr& graph, const Monomial& m) {
  Monomial best = m;
  Monomial image = m;
  for (size_t a = 1; a < graph->automorphisms.size(); ++a) {
    const GraphIso& iso = graph->automorphisms[a];
    for (size_t h = 0; h < m.psi_half.size(); ++h) image.psi_half[iso.half_map[h]] = m.psi_half[h];
    for (size_t v = 0; v < m.kappa.size(); ++v) image.kappa[iso.vertex_map[v]] = m.kappa[v];
    if (image < best) best = image;
  }
  return {graph, std::move(best)};
}

DecoratedStratum make_stratum(const StableGraph& graph, const Monomial& m) {
  Canonicalization c = canonicalize(graph);
  GraphPtr gp = intern(c.graph);
  Monomial t = Monomial::one(gp->graph);
  t.psi_legs = m.psi_legs;
  for (size_t h = 0; h < m.psi_half.size(); ++h) t.psi_half[c.iso.half_map[h]] = m.psi_half[h];
  for (size_t v = 0; v < m.kappa.size(); ++v) t.kappa[c.iso.vertex_map[v]] = m.kappa[v];
  return canonical_stratum(gp, t);
}

TautClass TautClass::fundamental(int g, int n) {
  TautClass c(g, n, 0);
  GraphPtr t = trivial_graph(g, n);
  c.add({t, Monomial::one(t->graph)}, 1);
  return c;
}

TautClass TautClass::from_stratum(const DecoratedStratum& s, const Rational& coeff) {
  TautClass c(s.graph->g, s.graph->n, s.codim());
  c.add(s, coeff);
  return c;
}

Rational TautClass::coefficient(const DecoratedStratum& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TautClass::add(const DecoratedStratum& s, const Rational& coeff) {
  if (coeff == 0) return;
  if (s.graph->g != g_ || s.graph->n != n_) throw std::invalid_argument("stratum of wrong type (g, n)");
  if (s.codim() != degree_) throw std::invalid_argument("stratum codimension differs from class degree");
  if (exceeds_vertex_dimension(*s.graph, s.decoration)) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void TautClass::check_compatible(const TautClass& o) const {
  if (o.g_ != g_ || o.n_ != n_) throw std::invalid_argument("classes live on different moduli spaces");
  if (o.degree_ != degree_) throw std::invalid_argument("classes have different degrees");
}

TautClass& TautClass::operator+=(const TautClass& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

bool TautClass::operator==(const TautClass& o) const {
  return g_ == o.g_ && n_ == o.n_ && degree_ == o.degree_ && terms_ == o.terms_;
}

TautClass combine(const std::vector<std::pair<Rational, TautClass>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("combine needs at least one class");
  const TautClass& first = pairs.front().second;
  TautClass out(first.g(), first.n(), first.degree());
  for (const auto& [c, x] : pairs) {
    if (x.g() != out.g() || x.n() != out.n() || x.degree() != out.degree())
      throw std::invalid_argument("combine: classes differ in (g, n, degree)");
    for (const auto& [s, a] : x.terms()) out.add(s, c * a);
  }
  return out;
}

MixedClass::MixedClass(int g, int n) : g_(g), n_(n) {
  const int top = 3 * g - 3 + n;
  for (int d = 0; d <= top; ++d) parts_.emplace_back(g, n, d);
}

MixedClass& MixedClass::operator+=(const MixedClass& o) {
  for (int d = 0; d <= top_degree(); ++d) parts_[d] += o.parts_.at(d);
  return *this;
}

MixedClass& MixedClass::operator-=(const MixedClass& o) {
  for (int d = 0; d <= top_degree(); ++d) parts_[d] -= o.parts_.at(d);
  return *this;
}

MixedClass& MixedClass::operator*=(const Rational& c) {
  for (auto& p : parts_) p *= c;
  return *this;
}

std::vector<std::vector<int>> integer_partitions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(total, 1);
  return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == parts - 1) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      cur[i] = x;
      rec(i + 1, remaining - x);
    }
  };
  rec(0, total);
  return out;
}

namespace {

// All local monomials of degree `deg` at vertex v: κ multiset plus ψ powers on its slots.
struct LocalDecoration {
  std::vector<int> kappa;
  std::vector<int> psi;  // aligned with slot list
};

std::vector<LocalDecoration> local_decorations(int deg, int slots) {
  std::vector<LocalDecoration> out;
  for (int j = 0; j <= deg; ++j)
    for (const auto& part : integer_partitions(j))
      for (const auto& psi : compositions(deg - j, slots)) out.push_back({part, psi});
  return out;
}

}  // namespace

std::vector<DecoratedStratum> generators(int g, int n, int d) {
  const int top = 3 * g - 3 + n;
  if (d < 0 || d > top) return {};
  std::set<DecoratedStratum> found;
  for (int e = 0; e <= d; ++e) {
    for (const GraphPtr& gp : graphs_with_edges(g, n, e)) {
      const StableGraph& graph = gp->graph;
      const int nv = graph.num_vertices();
      // slots per vertex: legs first (as -marking), then half-edges
      std::vector<std::vector<int>> slots(nv);
      for (int v = 0; v < nv; ++v) {
        for (int m : graph.legs[v]) slots[v].push_back(-m);
        for (int h : graph.half_edges_at(v)) slots[v].push_back(h);
      }
      for (const auto& split : compositions(d - e, nv)) {
        bool ok = true;
        for (int v = 0; v < nv; ++v) ok = ok && split[v] <= gp->vertex_dimension(v);
        if (!ok) continue;
        std::vector<std::vector<LocalDecoration>> options(nv);
        for (int v = 0; v < nv; ++v) options[v] = local_decorations(split[v], static_cast<int>(slots[v].size()));
        Monomial m = Monomial::one(graph);
        std::function<void(int)> rec = [&](int v) {
          if (v == nv) {
            found.insert(canonical_stratum(gp, m));
            return;
          }
          for (const auto& opt : options[v]) {
            m.kappa[v] = opt.kappa;
            for (size_t i = 0; i < slots[v].size(); ++i) {
              int s = slots[v][i];
              if (s < 0)
                m.psi_legs[-s - 1] = opt.psi[i];
              else
                m.psi_half[s] = opt.psi[i];
            }
            rec(v + 1);
          }
        };
        rec(0);
      }
    }
  }
  return {found.begin(), found.end()};
}

TautClass psi_class(int g, int n, int marking) {
  if (marking < 1 || marking > n) throw std::invalid_argument("marking out of range");
  GraphPtr t = trivial_graph(g, n);
  Monomial m = Monomial::one(t->graph);
  m.psi_legs[marking - 1] = 1;
  return TautClass::from_stratum({t, m});
}

TautClass kappa_class(int g, int n, int index) {
  if (index < 1) throw std::invalid_argument("kappa index must be positive");
  GraphPtr t = trivial_graph(g, n);
  Monomial m = Monomial::one(t->graph);
  m.kappa[0] = {index};
  TautClass c(g, n, index);
  c.add({t, m}, 1);
  return c;
}

TautClass stratum_class(const GraphPtr& graph) {
  return TautClass::from_stratum({graph, Monomial::one(graph->graph)});
}

TautClass boundary_divisor(const GraphPtr& graph) {
  if (graph->graph.num_edges() != 1) throw std::invalid_argument("boundary divisor needs a one-edge graph");
  return TautClass::from_stratum({graph, Monomial::one(graph->graph)}, Rational(1, graph->aut_count()));
}

GraphPtr separating_graph(int g, int n, int side_genus, const std::vector<int>& side_markings) {
  StableGraph graph;
  graph.genera = {side_genus, g - side_genus};
  std::vector<int> in = side_markings, out;
  std::sort(in.begin(), in.end());
  for (int m = 1; m <= n; ++m)
    if (!std::binary_search(in.begin(), in.end(), m)) out.push_back(m);
  graph.legs = {in, out};
  graph.edges = {{0, 1}};
  validate(graph, g, n);
  return intern(graph);
}

GraphPtr irreducible_graph(int g, int n) {
  StableGraph graph;
  graph.genera = {g - 1};
  std::vector<int> legs;
  for (int m = 1; m <= n; ++m) legs.push_back(m);
  graph.legs = {legs};
  graph.edges = {{0, 0}};
  validate(graph, g, n);
  return intern(graph);
}

}  // namespace tautring
