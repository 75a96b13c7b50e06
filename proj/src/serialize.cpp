#include "tautring/serialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tautring {

using nlohmann::json;

json graph_to_json(const GraphInfo& graph) {
  const LocusFlags flags = classify(graph.graph);
  return {{"graph", graph.key},
          {"vertices", graph.graph.num_vertices()},
          {"edges", graph.graph.num_edges()},
          {"h1", graph.graph.h1()},
          {"automorphisms", graph.aut_count()},
          {"tree", flags.is_tree},
          {"treelike", flags.is_treelike}};
}

json stratum_to_json(const DecoratedStratum& s) {
  json psi = json::object(), kappa = json::object();
  const Monomial& m = s.decoration;
  for (size_t i = 0; i < m.psi_legs.size(); ++i)
    if (m.psi_legs[i]) psi[std::to_string(i + 1)] = m.psi_legs[i];
  for (size_t h = 0; h < m.psi_half.size(); ++h)
    if (m.psi_half[h]) psi["h" + std::to_string(h)] = m.psi_half[h];
  for (size_t v = 0; v < m.kappa.size(); ++v)
    if (!m.kappa[v].empty()) kappa[std::to_string(v)] = m.kappa[v];
  return {{"graph", s.graph->key}, {"psi", psi}, {"kappa", kappa}};
}

namespace {

int parse_index(const std::string& text, int limit, const char* what) {
  size_t used = 0;
  int i = -1;
  try {
    i = std::stoi(text, &used);
  } catch (const std::exception&) {
  }
  if (used != text.size() || i < 0 || i >= limit) throw std::invalid_argument(std::string("bad ") + what + ": " + text);
  return i;
}

}  // namespace

DecoratedStratum stratum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph")) throw std::invalid_argument("stratum needs a graph");
  const StableGraph graph = decode(j.at("graph").get<std::string>());
  validate(graph, graph.total_genus(), graph.num_markings());
  Monomial m = Monomial::one(graph);
  if (j.contains("psi"))
    for (const auto& [key, value] : j.at("psi").items()) {
      const int e = value.get<int>();
      if (e < 0) throw std::invalid_argument("negative psi exponent");
      if (!key.empty() && key[0] == 'h')
        m.psi_half[parse_index(key.substr(1), graph.num_half_edges(), "half-edge")] += e;
      else {
        const int i = parse_index(key, graph.num_markings() + 1, "marking");
        if (i == 0) throw std::invalid_argument("markings start at 1");
        m.psi_legs[i - 1] += e;
      }
    }
  if (j.contains("kappa"))
    for (const auto& [key, value] : j.at("kappa").items()) {
      auto& slot = m.kappa[parse_index(key, graph.num_vertices(), "vertex")];
      for (int b : value.get<std::vector<int>>()) {
        if (b < 1) throw std::invalid_argument("kappa index must be positive");
        slot.push_back(b);
      }
      std::sort(slot.begin(), slot.end());
    }
  return make_stratum(graph, m);
}

json to_json(const TautClass& x) {
  json terms = json::array();
  for (const auto& [s, c] : x.terms()) {
    json t = stratum_to_json(s);
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  return {{"g", x.g()}, {"n", x.n()}, {"degree", x.degree()}, {"terms", terms}};
}

TautClass tautclass_from_json(const json& j) {
  try {
    TautClass x(j.at("g").get<int>(), j.at("n").get<int>(), j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
      const DecoratedStratum s = stratum_from_json(t);
      if (s.graph->g != x.g() || s.graph->n != x.n()) throw std::invalid_argument("term graph of wrong type");
      if (s.codim() != x.degree()) throw std::invalid_argument("term of wrong degree");
      x.add(s, parse_rational(t.at("coeff").get<std::string>()));
    }
    return x;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed class JSON: ") + e.what());
  }
}

json to_json(const MixedClass& x) {
  json parts = json::array();
  for (int d = 0; d <= x.top_degree(); ++d) parts.push_back(to_json(x[d]));
  return {{"g", x.g()}, {"n", x.n()}, {"parts", parts}};
}

MixedClass mixedclass_from_json(const json& j) {
  try {
    MixedClass x(j.at("g").get<int>(), j.at("n").get<int>());
    for (const auto& p : j.at("parts")) {
      TautClass t = tautclass_from_json(p);
      if (t.g() != x.g() || t.n() != x.n() || t.degree() > x.top_degree())
        throw std::invalid_argument("part of wrong type");
      x[t.degree()] += t;
    }
    return x;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed class JSON: ") + e.what());
  }
}

}  // namespace tautring
