#pragma once

// Stable dual graphs of type (g, n): representation, canonical labelling,
// automorphisms, enumeration and locus classification.
//
// Half-edges are graph-local: edge e owns half-edges 2e (at edges[e].first)
// and 2e+1 (at edges[e].second). Legs are identified with their marking
// label 1..n and stored per vertex.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tautring {

struct StableGraph {
  std::vector<int> genera;
  std::vector<std::vector<int>> legs;
  std::vector<std::pair<int, int>> edges;

  int num_vertices() const { return static_cast<int>(genera.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_half_edges() const { return 2 * num_edges(); }
  int num_markings() const;

  int vertex_of(int half_edge) const {
    const auto& e = edges[half_edge / 2];
    return (half_edge % 2 == 0) ? e.first : e.second;
  }
  bool is_loop(int edge) const { return edges[edge].first == edges[edge].second; }

  /// Half-edges attached to v, ascending.
  std::vector<int> half_edges_at(int v) const;
  /// n(v): legs plus half-edges.
  int valence(int v) const;
  int h1() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  /// Vertex carrying marking i, or -1.
  int vertex_of_leg(int marking) const;

  bool operator==(const StableGraph&) const = default;
};

/// Throws std::invalid_argument unless the graph is a connected stable graph of type (g, n).
void validate(const StableGraph& graph, int g, int n);

/// Maps one labelling onto another: vertex_map[old] = new, half_map[old] = new.
struct GraphIso {
  std::vector<int> vertex_map;
  std::vector<int> half_map;
};

struct Canonicalization {
  StableGraph graph;
  GraphIso iso;  // input -> canonical
};

Canonicalization canonicalize(const StableGraph& graph);

/// Canonical text encoding, e.g. "(0|1,2)(1|)[0-1]": vertices as (genus|legs), then
/// edges as [u-v] with half-edge 2e at u and 2e+1 at v.
std::string encode(const StableGraph& graph);
StableGraph decode(std::string_view text);

/// Automorphisms of a graph fixing legs pointwise, including half-edge swaps of
/// loops and permutations of parallel edges. The identity comes first.
std::vector<GraphIso> automorphisms(const StableGraph& graph);

/// A canonical graph together with the data every consumer needs.
struct GraphInfo {
  StableGraph graph;
  std::string key;
  int g = 0;
  int n = 0;
  std::vector<GraphIso> automorphisms;
  /// vertex of each half-edge and of each leg (index marking-1)
  std::vector<int> half_vertex;
  std::vector<int> leg_vertex;

  int aut_count() const { return static_cast<int>(automorphisms.size()); }
  /// 3g(v) - 3 + n(v)
  int vertex_dimension(int v) const;
};

using GraphPtr = std::shared_ptr<const GraphInfo>;

/// Interns a graph (canonicalizing it first); equal graphs share one record.
GraphPtr intern(const StableGraph& graph);
GraphPtr intern_key(const std::string& key);

/// Graph with one vertex of genus g carrying all n legs.
GraphPtr trivial_graph(int g, int n);

/// All stable graphs of type (g, n) with at most codim_max edges, one per
/// isomorphism class, sorted by canonical encoding.
std::vector<GraphPtr> enumerate_stable_graphs(int g, int n, int codim_max);
/// Stable graphs of type (g, n) with exactly `edges` edges, sorted by encoding.
const std::vector<GraphPtr>& graphs_with_edges(int g, int n, int edges);

int automorphism_count(const StableGraph& graph);

enum class LocusKind { all, treelike, compact_type, smooth };

struct LocusFlags {
  bool is_tree = false;
  bool is_treelike = false;
};

LocusFlags classify(const StableGraph& graph);
bool in_locus(const StableGraph& graph, LocusKind locus);

std::string to_string(LocusKind locus);
LocusKind parse_locus(std::string_view text);

/// Result of contracting a set of edges.
struct Contraction {
  StableGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> half_map;    // old half-edge -> new half-edge, -1 if contracted
};

Contraction contract_edges(const StableGraph& graph, const std::vector<bool>& contract);

/// Stable graphs obtained by inserting one edge (add a loop or split a vertex).
std::vector<StableGraph> one_edge_degenerations(const StableGraph& graph);

/// Snapshot and restore of the enumeration memo, used by the persistent cache.
struct GraphCacheEntry {
  int g = 0, n = 0, edges = 0;
  std::vector<std::string> keys;
};
std::vector<GraphCacheEntry> graph_cache_snapshot();
void graph_cache_restore(const std::vector<GraphCacheEntry>& entries);
void graph_cache_clear();

}  // namespace tautring
