#include "bellcc/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bellcc::graphs {

ExperimentalGraph cycle_graph(int m) {
  if (m < 2) throw std::invalid_argument("cycle_graph requires m >= 2");
  ExperimentalGraph g;
  g.parties = 2;
  g.vertex_counts = {m, m};
  for (int i = 0; i < m; ++i) {
    g.edges.push_back({{{0, i}, {1, i}}, +1});
    if (i + 1 < m) g.edges.push_back({{{0, i + 1}, {1, i}}, +1});
  }
  g.edges.push_back({{{0, 0}, {1, m - 1}}, -1});
  return g;
}

ExperimentalGraph chsh_graph() { return cycle_graph(2); }

ExperimentalGraph six_cycle_graph() {
  ExperimentalGraph g;
  g.parties = 2;
  g.vertex_counts = {3, 3};
  g.edges = {
      {{{0, 0}, {1, 0}}, +1}, {{{0, 1}, {1, 0}}, +1}, {{{0, 1}, {1, 1}}, +1},
      {{{0, 2}, {1, 1}}, +1}, {{{0, 2}, {1, 2}}, -1}, {{{0, 0}, {1, 2}}, +1},
  };
  return g;
}

ExperimentalGraph g23_graph() {
  ExperimentalGraph g;
  g.parties = 2;
  g.vertex_counts = {2, 3};
  g.edges = {
      {{{0, 0}, {1, 0}}, +1}, {{{0, 1}, {1, 0}}, +1}, {{{0, 1}, {1, 1}}, +1},
      {{{0, 0}, {1, 1}}, +1}, {{{0, 0}, {1, 2}}, +1}, {{{0, 1}, {1, 2}}, -1},
  };
  return g;
}

std::optional<int> detect_canonical_cycle(const ExperimentalGraph& g) {
  if (g.parties != 2 || g.vertex_counts.size() != 2) return std::nullopt;
  const int m = g.vertex_counts[0];
  if (m < 2 || g.vertex_counts[1] != m) return std::nullopt;
  if (g.edges.size() != static_cast<std::size_t>(2 * m)) return std::nullopt;

  auto tuple_set = [](const ExperimentalGraph& graph) {
    std::set<std::vector<VertexId>> s;
    for (const SignedEdge& e : graph.edges) s.insert(party_ordered(e));
    return s;
  };
  if (tuple_set(g) != tuple_set(cycle_graph(m))) return std::nullopt;
  return m;
}

}  // namespace bellcc::graphs
