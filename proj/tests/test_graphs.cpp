#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tautring/graphs.hpp"

using namespace tautring;

namespace {

int total_graphs(int g, int n) { return static_cast<int>(enumerate_stable_graphs(g, n, 3 * g - 3 + n).size()); }

// Counts pairs (vertex permutation, half-edge permutation) preserving genera, legs,
// incidence and the edge involution.
int brute_automorphisms(const StableGraph& gr) {
  const int V = gr.num_vertices(), H = gr.num_half_edges();
  std::vector<int> pv(V), ph(H);
  std::iota(pv.begin(), pv.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) ok = gr.genera[v] == gr.genera[pv[v]] && gr.legs[v] == gr.legs[pv[v]];
    if (!ok) continue;
    std::iota(ph.begin(), ph.end(), 0);
    do {
      bool good = true;
      for (int h = 0; h < H && good; ++h) {
        good = pv[gr.vertex_of(h)] == gr.vertex_of(ph[h]);
        good = good && ph[h ^ 1] == (ph[h] ^ 1);
      }
      count += good;
    } while (std::next_permutation(ph.begin(), ph.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  return count;
}

StableGraph relabel(const StableGraph& gr, std::mt19937& rng) {
  const int V = gr.num_vertices();
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  StableGraph out;
  out.genera.resize(V);
  out.legs.resize(V);
  for (int v = 0; v < V; ++v) {
    out.genera[perm[v]] = gr.genera[v];
    out.legs[perm[v]] = gr.legs[v];
  }
  for (auto [a, b] : gr.edges) {
    if (rng() % 2) std::swap(a, b);
    out.edges.emplace_back(perm[a], perm[b]);
  }
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("known graph counts") {
  CHECK(enumerate_stable_graphs(1, 1, 1).size() == 2);
  CHECK(total_graphs(0, 4) == 4);
  CHECK(total_graphs(0, 5) == 26);
  CHECK(total_graphs(1, 1) == 2);
  CHECK(total_graphs(1, 2) == 5);
  CHECK(total_graphs(2, 0) == 7);
  CHECK(graphs_with_edges(0, 5, 1).size() == 10);
  CHECK(graphs_with_edges(0, 5, 2).size() == 15);
}

TEST_CASE("unstable types are rejected") {
  CHECK_THROWS(enumerate_stable_graphs(0, 2, 0));
  CHECK_THROWS(enumerate_stable_graphs(1, 0, 0));
}

TEST_CASE("graph invariants and automorphisms against brute force") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    const auto graphs = enumerate_stable_graphs(g, n, 3 * g - 3 + n);
    std::set<std::string> keys;
    for (const auto& p : graphs) {
      CHECK_NOTHROW(validate(p->graph, g, n));
      CHECK(p->graph.total_genus() == g);
      keys.insert(p->key);
      if (p->graph.num_edges() <= 3) CHECK(p->aut_count() == brute_automorphisms(p->graph));
    }
    CHECK(keys.size() == graphs.size());
    CHECK(std::is_sorted(graphs.begin(), graphs.end(), [](auto& a, auto& b) { return a->key < b->key; }));
  }
}

TEST_CASE("canonical form ignores labelling") {
  std::mt19937 rng(7);
  for (const auto& p : enumerate_stable_graphs(1, 3, 3))
    for (int t = 0; t < 5; ++t) {
      const StableGraph other = relabel(p->graph, rng);
      CHECK(encode(canonicalize(other).graph) == p->key);
      CHECK(intern(other) == p);
    }
}

TEST_CASE("encode decode round trip") {
  for (const auto& p : enumerate_stable_graphs(2, 1, 4)) CHECK(encode(decode(p->key)) == p->key);
  CHECK_THROWS(decode("(0|1"));
}

TEST_CASE("known automorphism counts") {
  const auto theta = intern(StableGraph{{0, 0}, {{}, {}}, {{0, 1}, {0, 1}, {0, 1}}});
  CHECK(theta->aut_count() == 12);
  const auto dumbbell = intern(StableGraph{{0, 0}, {{}, {}}, {{0, 0}, {0, 1}, {1, 1}}});
  CHECK(dumbbell->aut_count() == 8);
}

TEST_CASE("locus classification") {
  const auto loop = intern(StableGraph{{0}, {{1}}, {{0, 0}}});
  const auto banana = intern(StableGraph{{0, 0}, {{1}, {2}}, {{0, 1}, {0, 1}}});
  const auto tree = intern(StableGraph{{1, 0}, {{}, {1, 2}}, {{0, 1}}});
  CHECK(in_locus(loop->graph, LocusKind::treelike));
  CHECK_FALSE(in_locus(loop->graph, LocusKind::compact_type));
  CHECK_FALSE(in_locus(banana->graph, LocusKind::treelike));
  CHECK(in_locus(tree->graph, LocusKind::compact_type));
  CHECK_FALSE(in_locus(tree->graph, LocusKind::smooth));
  CHECK(in_locus(trivial_graph(1, 2)->graph, LocusKind::smooth));
  for (const auto& p : enumerate_stable_graphs(2, 2, 5)) {
    if (in_locus(p->graph, LocusKind::smooth)) CHECK(in_locus(p->graph, LocusKind::compact_type));
    if (in_locus(p->graph, LocusKind::compact_type)) CHECK(in_locus(p->graph, LocusKind::treelike));
    CHECK(in_locus(p->graph, LocusKind::all));
  }
  for (auto l : {LocusKind::all, LocusKind::treelike, LocusKind::compact_type, LocusKind::smooth})
    CHECK(parse_locus(to_string(l)) == l);
}

TEST_CASE("small examples") {
  const auto g03 = enumerate_stable_graphs(0, 3, 0);
  REQUIRE(g03.size() == 1);
  CHECK(g03[0]->aut_count() == 1);
  const auto g11 = enumerate_stable_graphs(1, 1, 1);
  CHECK(g11[0]->aut_count() * g11[1]->aut_count() == 2);
  const auto banana = intern(StableGraph{{0, 0}, {{1}, {2}}, {{0, 1}, {0, 1}}});
  const auto two_edge = graphs_with_edges(1, 2, 2);
  CHECK(std::find(two_edge.begin(), two_edge.end(), banana) != two_edge.end());
  CHECK(banana->aut_count() == 2);
  CHECK_THROWS(validate(StableGraph{{0, 0}, {{1, 2}, {}}, {{0, 1}, {0, 1}}}, 1, 2));
  const LocusFlags main = classify(trivial_graph(1, 2)->graph);
  CHECK(main.is_tree);
  CHECK(main.is_treelike);
  const LocusFlags b = classify(banana->graph);
  CHECK_FALSE(b.is_tree);
  CHECK_FALSE(b.is_treelike);
}
