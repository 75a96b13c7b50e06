#include "tautring/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautring {

int StableGraph::num_markings() const {
  int n = 0;
  for (const auto& l : legs) n += static_cast<int>(l.size());
  return n;
}

std::vector<int> StableGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (vertex_of(h) == v) out.push_back(h);
  return out;
}

int StableGraph::valence(int v) const {
  int val = static_cast<int>(legs[v].size());
  for (const auto& [a, b] : edges) val += (a == v) + (b == v);
  return val;
}

int StableGraph::total_genus() const {
  return std::accumulate(genera.begin(), genera.end(), 0) + h1();
}

int StableGraph::vertex_of_leg(int marking) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (std::find(legs[v].begin(), legs[v].end(), marking) != legs[v].end()) return v;
  return -1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected(const StableGraph& graph) {
  if (graph.num_vertices() == 0) return false;
  UnionFind uf(graph.num_vertices());
  for (const auto& [a, b] : graph.edges) uf.unite(a, b);
  int root = uf.find(0);
  for (int v = 1; v < graph.num_vertices(); ++v)
    if (uf.find(v) != root) return false;
  return true;
}

template <class Sig>
std::vector<int> ranks_of(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(sigs.size());
  for (size_t i = 0; i < sigs.size(); ++i)
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  return ranks;
}

int count_distinct(const std::vector<int>& v) {
  return static_cast<int>(std::set<int>(v.begin(), v.end()).size());
}

// Colour refinement seeded with (genus, legs, valence, loops).
std::vector<int> vertex_colours(const StableGraph& graph) {
  const int nv = graph.num_vertices();
  std::vector<std::vector<long>> sig(nv);
  std::vector<std::map<int, int>> adjacency(nv);
  std::vector<int> loops(nv, 0);
  for (const auto& [a, b] : graph.edges) {
    if (a == b) {
      ++loops[a];
    } else {
      ++adjacency[a][b];
      ++adjacency[b][a];
    }
  }
  for (int v = 0; v < nv; ++v) {
    sig[v].push_back(graph.genera[v]);
    sig[v].push_back(static_cast<long>(graph.legs[v].size()));
    for (int l : graph.legs[v]) sig[v].push_back(l);
    sig[v].push_back(graph.valence(v));
    sig[v].push_back(loops[v]);
  }
  std::vector<int> ranks = ranks_of(sig);
  for (;;) {
    std::vector<std::vector<long>> refined(nv);
    for (int v = 0; v < nv; ++v) {
      refined[v].push_back(ranks[v]);
      std::vector<std::pair<int, int>> nb;
      for (const auto& [u, c] : adjacency[v]) nb.emplace_back(ranks[u], c);
      std::sort(nb.begin(), nb.end());
      for (const auto& [r, c] : nb) {
        refined[v].push_back(r);
        refined[v].push_back(c);
      }
    }
    std::vector<int> next = ranks_of(refined);
    if (count_distinct(next) == count_distinct(ranks)) break;
    ranks = std::move(next);
  }
  return ranks;
}

// Calls visit(order) for every ordering of vertices that lists colour classes in
// ascending colour and permutes freely within each class. order[pos] = vertex.
void for_each_colour_ordering(const std::vector<int>& colours,
                              const std::function<void(const std::vector<int>&)>& visit) {
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < static_cast<int>(colours.size()); ++v) classes[colours[v]].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [c, vs] : classes) groups.push_back(vs);
  std::vector<int> order;
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      visit(order);
      return;
    }
    std::vector<int> perm = groups[gi];
    do {
      size_t base = order.size();
      order.insert(order.end(), perm.begin(), perm.end());
      rec(gi + 1);
      order.resize(base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
}

std::vector<std::pair<int, int>> relabelled_edges(const StableGraph& graph, const std::vector<int>& pos) {
  std::vector<std::pair<int, int>> out;
  out.reserve(graph.edges.size());
  for (const auto& [a, b] : graph.edges) {
    int pa = pos[a], pb = pos[b];
    out.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate(const StableGraph& graph, int g, int n) {
  const int nv = graph.num_vertices();
  if (nv == 0) throw std::invalid_argument("graph has no vertices");
  if (static_cast<int>(graph.legs.size()) != nv) throw std::invalid_argument("legs/genera size mismatch");
  for (const auto& [a, b] : graph.edges)
    if (a < 0 || b < 0 || a >= nv || b >= nv) throw std::invalid_argument("edge endpoint out of range");
  std::vector<int> seen(n + 1, 0);
  for (const auto& l : graph.legs)
    for (int m : l) {
      if (m < 1 || m > n) throw std::invalid_argument("marking out of range");
      if (seen[m]++) throw std::invalid_argument("marking appears twice");
    }
  for (int m = 1; m <= n; ++m)
    if (!seen[m]) throw std::invalid_argument("marking missing");
  for (int v = 0; v < nv; ++v) {
    if (graph.genera[v] < 0) throw std::invalid_argument("negative vertex genus");
    if (2 * graph.genera[v] - 2 + graph.valence(v) <= 0) throw std::invalid_argument("unstable vertex");
  }
  if (!connected(graph)) throw std::invalid_argument("graph is not connected");
  if (graph.total_genus() != g) throw std::invalid_argument("genus formula violated");
}

Canonicalization canonicalize(const StableGraph& graph) {
  const int nv = graph.num_vertices();
  const std::vector<int> colours = vertex_colours(graph);

  std::vector<int> best_order;
  std::vector<std::pair<int, int>> best_edges;
  std::vector<int> pos(nv);
  for_each_colour_ordering(colours, [&](const std::vector<int>& order) {
    for (int p = 0; p < nv; ++p) pos[order[p]] = p;
    auto e = relabelled_edges(graph, pos);
    if (best_order.empty() || e < best_edges) {
      best_edges = std::move(e);
      best_order = order;
    }
  });

  Canonicalization out;
  out.iso.vertex_map.assign(nv, 0);
  for (int p = 0; p < nv; ++p) out.iso.vertex_map[best_order[p]] = p;
  for (int p = 0; p < nv; ++p) {
    out.graph.genera.push_back(graph.genera[best_order[p]]);
    auto l = graph.legs[best_order[p]];
    std::sort(l.begin(), l.end());
    out.graph.legs.push_back(std::move(l));
  }

  struct Placed {
    int a, b, first_half, second_half;
  };
  std::vector<Placed> placed;
  for (int e = 0; e < graph.num_edges(); ++e) {
    int pa = out.iso.vertex_map[graph.edges[e].first];
    int pb = out.iso.vertex_map[graph.edges[e].second];
    if (pa <= pb)
      placed.push_back({pa, pb, 2 * e, 2 * e + 1});
    else
      placed.push_back({pb, pa, 2 * e + 1, 2 * e});
  }
  std::stable_sort(placed.begin(), placed.end(),
                   [](const Placed& x, const Placed& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  out.iso.half_map.assign(graph.num_half_edges(), -1);
  for (int i = 0; i < static_cast<int>(placed.size()); ++i) {
    out.graph.edges.emplace_back(placed[i].a, placed[i].b);
    out.iso.half_map[placed[i].first_half] = 2 * i;
    out.iso.half_map[placed[i].second_half] = 2 * i + 1;
  }
  return out;
}

std::string encode(const StableGraph& graph) {
  std::ostringstream os;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    os << '(' << graph.genera[v] << '|';
    for (size_t i = 0; i < graph.legs[v].size(); ++i) os << (i ? "," : "") << graph.legs[v][i];
    os << ')';
  }
  for (const auto& [a, b] : graph.edges) os << '[' << a << '-' << b << ']';
  return os.str();
}

StableGraph decode(std::string_view text) {
  StableGraph graph;
  size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed graph encoding: " + std::string(text)); };
  auto read_int = [&]() {
    size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (text[start] == '-' && i == start + 1)) fail();
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) fail();
    ++i;
  };
  while (i < text.size() && text[i] == '(') {
    ++i;
    graph.genera.push_back(read_int());
    expect('|');
    std::vector<int> legs;
    while (i < text.size() && text[i] != ')') {
      legs.push_back(read_int());
      if (i < text.size() && text[i] == ',') ++i;
    }
    expect(')');
    std::sort(legs.begin(), legs.end());
    graph.legs.push_back(std::move(legs));
  }
  while (i < text.size() && text[i] == '[') {
    ++i;
    int a = read_int();
    expect('-');
    int b = read_int();
    expect(']');
    graph.edges.emplace_back(a, b);
  }
  if (i != text.size() || graph.genera.empty()) fail();
  for (const auto& [a, b] : graph.edges)
    if (a < 0 || b < 0 || a >= graph.num_vertices() || b >= graph.num_vertices()) fail();
  return graph;
}

std::vector<GraphIso> automorphisms(const StableGraph& graph) {
  const int nv = graph.num_vertices();
  const std::vector<int> colours = vertex_colours(graph);
  const auto reference = relabelled_edges(graph, [&] {
    std::vector<int> id(nv);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());

  // edges grouped by (min, max) endpoint pair
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int e = 0; e < graph.num_edges(); ++e) {
    auto [a, b] = graph.edges[e];
    groups[{std::min(a, b), std::max(a, b)}].push_back(e);
  }

  std::vector<GraphIso> result;
  std::vector<int> sigma(nv);
  // Orderings list colour classes in ascending order; the map position -> vertex
  // is a colour-preserving permutation exactly when order is read against the
  // identity ordering of the same classes.
  std::vector<int> identity_order;
  for_each_colour_ordering(colours, [&](const std::vector<int>& order) {
    if (identity_order.empty()) identity_order = order;
  });
  for_each_colour_ordering(colours, [&](const std::vector<int>& order) {
    for (int p = 0; p < nv; ++p) sigma[identity_order[p]] = order[p];
    if (relabelled_edges(graph, sigma) != reference) return;

    // For each edge group, all bijections onto the target group (and loop flips).
    std::vector<std::vector<std::vector<std::pair<int, int>>>> options;  // per group: list of half-maps
    for (const auto& [ends, src] : groups) {
      int ta = sigma[ends.first], tb = sigma[ends.second];
      const auto& tgt = groups.at({std::min(ta, tb), std::max(ta, tb)});
      const bool loop = ends.first == ends.second;
      std::vector<std::vector<std::pair<int, int>>> opts;
      std::vector<int> perm = tgt;
      do {
        const int k = static_cast<int>(src.size());
        const int flips = loop ? (1 << k) : 1;
        for (int f = 0; f < flips; ++f) {
          std::vector<std::pair<int, int>> hm;
          for (int i = 0; i < k; ++i) {
            int e = src[i], t = perm[i];
            bool swap;
            if (loop) {
              swap = (f >> i) & 1;
            } else {
              // half 2e sits at edges[e].first; it must land on the half at sigma(first)
              swap = graph.edges[t].first != sigma[graph.edges[e].first];
            }
            hm.emplace_back(2 * e, swap ? 2 * t + 1 : 2 * t);
            hm.emplace_back(2 * e + 1, swap ? 2 * t : 2 * t + 1);
          }
          opts.push_back(std::move(hm));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      options.push_back(std::move(opts));
    }

    GraphIso iso;
    iso.vertex_map = sigma;
    iso.half_map.assign(graph.num_half_edges(), -1);
    std::function<void(size_t)> rec = [&](size_t gi) {
      if (gi == options.size()) {
        result.push_back(iso);
        return;
      }
      for (const auto& hm : options[gi]) {
        for (const auto& [from, to] : hm) iso.half_map[from] = to;
        rec(gi + 1);
      }
    };
    rec(0);
  });
  return result;
}

int automorphism_count(const StableGraph& graph) { return static_cast<int>(automorphisms(graph).size()); }

int GraphInfo::vertex_dimension(int v) const { return 3 * graph.genera[v] - 3 + graph.valence(v); }

namespace {

std::mutex intern_mutex;
std::map<std::string, GraphPtr>& intern_table() {
  static std::map<std::string, GraphPtr> table;
  return table;
}

}  // namespace

GraphPtr intern(const StableGraph& graph) {
  Canonicalization c = canonicalize(graph);
  std::string key = encode(c.graph);
  {
    std::lock_guard lock(intern_mutex);
    auto it = intern_table().find(key);
    if (it != intern_table().end()) return it->second;
  }
  auto info = std::make_shared<GraphInfo>();
  info->graph = std::move(c.graph);
  info->key = key;
  info->n = info->graph.num_markings();
  info->g = info->graph.total_genus();
  info->automorphisms = automorphisms(info->graph);
  info->half_vertex.resize(info->graph.num_half_edges());
  for (int h = 0; h < info->graph.num_half_edges(); ++h) info->half_vertex[h] = info->graph.vertex_of(h);
  info->leg_vertex.assign(info->n, -1);
  for (int v = 0; v < info->graph.num_vertices(); ++v)
    for (int m : info->graph.legs[v])
      if (m >= 1 && m <= info->n) info->leg_vertex[m - 1] = v;
  std::lock_guard lock(intern_mutex);
  auto [it, inserted] = intern_table().emplace(key, std::move(info));
  return it->second;
}

GraphPtr intern_key(const std::string& key) {
  {
    std::lock_guard lock(intern_mutex);
    auto it = intern_table().find(key);
    if (it != intern_table().end()) return it->second;
  }
  return intern(decode(key));
}

GraphPtr trivial_graph(int g, int n) {
  StableGraph graph;
  graph.genera = {g};
  std::vector<int> legs(n);
  std::iota(legs.begin(), legs.end(), 1);
  graph.legs = {legs};
  return intern(graph);
}

std::vector<StableGraph> one_edge_degenerations(const StableGraph& graph) {
  std::vector<StableGraph> out;
  const int nv = graph.num_vertices();
  for (int v = 0; v < nv; ++v) {
    if (graph.genera[v] >= 1) {
      StableGraph h = graph;
      --h.genera[v];
      h.edges.emplace_back(v, v);
      out.push_back(std::move(h));
    }
    const std::vector<int>& legs = graph.legs[v];
    const std::vector<int> halves = graph.half_edges_at(v);
    const int nl = static_cast<int>(legs.size());
    const int slots = nl + static_cast<int>(halves.size());
    for (int g1 = 0; g1 <= graph.genera[v]; ++g1) {
      const int g2 = graph.genera[v] - g1;
      for (unsigned mask = 0; mask < (1u << slots); ++mask) {
        const int on_first = __builtin_popcount(mask);
        if (2 * g1 - 2 + on_first + 1 <= 0) continue;
        if (2 * g2 - 2 + (slots - on_first) + 1 <= 0) continue;
        StableGraph h = graph;
        const int w = nv;
        h.genera[v] = g1;
        h.genera.push_back(g2);
        std::vector<int> l1, l2;
        for (int i = 0; i < nl; ++i) ((mask >> i) & 1 ? l1 : l2).push_back(legs[i]);
        h.legs[v] = l1;
        h.legs.push_back(l2);
        for (size_t j = 0; j < halves.size(); ++j) {
          if ((mask >> (nl + j)) & 1) continue;
          int he = halves[j];
          if (he % 2 == 0)
            h.edges[he / 2].first = w;
          else
            h.edges[he / 2].second = w;
        }
        h.edges.emplace_back(v, w);
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

namespace {

std::mutex enum_mutex;
std::map<std::pair<int, int>, std::deque<std::vector<GraphPtr>>>& enum_table() {
  static std::map<std::pair<int, int>, std::deque<std::vector<GraphPtr>>> table;
  return table;
}

bool sort_by_key(const GraphPtr& a, const GraphPtr& b) { return a->key < b->key; }

}  // namespace

const std::vector<GraphPtr>& graphs_with_edges(int g, int n, int edges) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
  static const std::vector<GraphPtr> empty;
  if (edges < 0 || edges > 3 * g - 3 + n) return empty;
  std::lock_guard lock(enum_mutex);
  auto& levels = enum_table()[{g, n}];
  if (levels.empty()) levels.push_back({trivial_graph(g, n)});
  while (static_cast<int>(levels.size()) <= edges) {
    std::map<std::string, GraphPtr> next;
    for (const auto& gp : levels.back())
      for (const auto& h : one_edge_degenerations(gp->graph)) {
        GraphPtr p = intern(h);
        next.emplace(p->key, p);
      }
    std::vector<GraphPtr> level;
    for (auto& [k, p] : next) level.push_back(p);
    levels.push_back(std::move(level));
  }
  return levels[edges];
}

std::vector<GraphPtr> enumerate_stable_graphs(int g, int n, int codim_max) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
  if (codim_max < 0 || codim_max > 3 * g - 3 + n)
    throw std::invalid_argument("codim_max outside [0, 3g-3+n]");
  std::vector<GraphPtr> out;
  for (int e = 0; e <= codim_max; ++e) {
    const auto& level = graphs_with_edges(g, n, e);
    out.insert(out.end(), level.begin(), level.end());
  }
  std::sort(out.begin(), out.end(), sort_by_key);
  return out;
}

std::vector<GraphCacheEntry> graph_cache_snapshot() {
  std::lock_guard lock(enum_mutex);
  std::vector<GraphCacheEntry> out;
  for (const auto& [gn, levels] : enum_table())
    for (size_t e = 0; e < levels.size(); ++e) {
      GraphCacheEntry entry{gn.first, gn.second, static_cast<int>(e), {}};
      for (const auto& p : levels[e]) entry.keys.push_back(p->key);
      out.push_back(std::move(entry));
    }
  return out;
}

void graph_cache_restore(const std::vector<GraphCacheEntry>& entries) {
  // Entries must form contiguous levels 0..e for each (g, n); anything else is ignored.
  std::map<std::pair<int, int>, std::map<int, const GraphCacheEntry*>> by_type;
  for (const auto& e : entries) by_type[{e.g, e.n}][e.edges] = &e;
  std::map<std::pair<int, int>, std::deque<std::vector<GraphPtr>>> restored;
  for (const auto& [gn, levels] : by_type) {
    std::deque<std::vector<GraphPtr>> dq;
    int expected = 0;
    for (const auto& [e, entry] : levels) {
      if (e != expected) break;
      std::vector<GraphPtr> level;
      for (const auto& k : entry->keys) {
        GraphPtr p = intern_key(k);
        if (p->key != k || p->g != gn.first || p->n != gn.second || p->graph.num_edges() != e)
          throw std::runtime_error("graph cache entry is not canonical: " + k);
        level.push_back(p);
      }
      std::sort(level.begin(), level.end(), sort_by_key);
      dq.push_back(std::move(level));
      ++expected;
    }
    if (!dq.empty()) restored[gn] = std::move(dq);
  }
  std::lock_guard lock(enum_mutex);
  for (auto& [gn, dq] : restored) {
    auto& cur = enum_table()[gn];
    if (cur.size() < dq.size()) cur = std::move(dq);
  }
}

void graph_cache_clear() {
  std::lock_guard lock(enum_mutex);
  enum_table().clear();
}

LocusFlags classify(const StableGraph& graph) {
  int loops = 0;
  for (int e = 0; e < graph.num_edges(); ++e) loops += graph.is_loop(e);
  LocusFlags f;
  f.is_tree = graph.h1() == 0;
  f.is_treelike = graph.num_edges() - loops == graph.num_vertices() - 1;
  return f;
}

bool in_locus(const StableGraph& graph, LocusKind locus) {
  switch (locus) {
    case LocusKind::all:
      return true;
    case LocusKind::treelike:
      return classify(graph).is_treelike;
    case LocusKind::compact_type:
      return classify(graph).is_tree;
    case LocusKind::smooth:
      return graph.num_edges() == 0;
  }
  return false;
}

std::string to_string(LocusKind locus) {
  switch (locus) {
    case LocusKind::all:
      return "all";
    case LocusKind::treelike:
      return "treelike";
    case LocusKind::compact_type:
      return "compact_type";
    case LocusKind::smooth:
      return "smooth";
  }
  return "?";
}

LocusKind parse_locus(std::string_view text) {
  if (text == "all") return LocusKind::all;
  if (text == "treelike" || text == "tl") return LocusKind::treelike;
  if (text == "compact_type" || text == "ct") return LocusKind::compact_type;
  if (text == "smooth") return LocusKind::smooth;
  throw std::invalid_argument("unknown locus: " + std::string(text));
}

Contraction contract_edges(const StableGraph& graph, const std::vector<bool>& contract) {
  const int nv = graph.num_vertices();
  UnionFind uf(nv);
  for (int e = 0; e < graph.num_edges(); ++e)
    if (contract[e]) uf.unite(graph.edges[e].first, graph.edges[e].second);

  Contraction out;
  out.vertex_map.assign(nv, -1);
  std::map<int, int> root_index;
  for (int v = 0; v < nv; ++v) {
    int r = uf.find(v);
    auto [it, inserted] = root_index.emplace(r, static_cast<int>(root_index.size()));
    out.vertex_map[v] = it->second;
  }
  const int nw = static_cast<int>(root_index.size());
  out.graph.genera.assign(nw, 0);
  out.graph.legs.assign(nw, {});
  std::vector<int> members(nw, 0), inner_edges(nw, 0);
  for (int v = 0; v < nv; ++v) {
    int w = out.vertex_map[v];
    out.graph.genera[w] += graph.genera[v];
    ++members[w];
    for (int m : graph.legs[v]) out.graph.legs[w].push_back(m);
  }
  out.half_map.assign(graph.num_half_edges(), -1);
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (contract[e]) {
      ++inner_edges[out.vertex_map[graph.edges[e].first]];
      continue;
    }
    int idx = out.graph.num_edges();
    out.graph.edges.emplace_back(out.vertex_map[graph.edges[e].first], out.vertex_map[graph.edges[e].second]);
    out.half_map[2 * e] = 2 * idx;
    out.half_map[2 * e + 1] = 2 * idx + 1;
  }
  for (int w = 0; w < nw; ++w) {
    out.graph.genera[w] += inner_edges[w] - members[w] + 1;
    std::sort(out.graph.legs[w].begin(), out.graph.legs[w].end());
  }
  return out;
}

}  // namespace tautring
