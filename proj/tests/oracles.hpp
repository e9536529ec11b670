#pragma once

// Independent test oracles: brute-force implementations kept deliberately
// separate from the library code paths they check.

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "bellcc/graphs.hpp"
#include "bellcc/rng.hpp"

namespace oracle {

inline bellcc::graphs::CompatibilityGraph make_compat(
    int n, const std::vector<std::pair<int, int>>& edges) {
  bellcc::graphs::CompatibilityGraph g;
  g.vertex_count = n;
  g.adjacency.resize(n);
  for (auto [u, v] : edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

// Chordality by exhaustive induced-cycle search: a graph is chordal iff no
// vertex subset of size >= 4 induces a cycle.
inline bool chordal_bruteforce(const bellcc::graphs::CompatibilityGraph& g) {
  const int n = g.vertex_count;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    int members = 0, induced_edges = 0;
    bool degrees_ok = true;
    int start = -1;
    for (int u = 0; u < n; ++u) {
      if (!((mask >> u) & 1u)) continue;
      ++members;
      start = u;
      int deg = 0;
      for (int v : g.adjacency[u])
        if ((mask >> v) & 1u) ++deg;
      if (deg != 2) degrees_ok = false;
      induced_edges += deg;
    }
    if (!degrees_ok || induced_edges != 2 * members) continue;
    // connected 2-regular induced subgraph on >= 4 vertices is an induced cycle
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int visited = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++visited;
      for (int v : g.adjacency[u])
        if (((mask >> v) & 1u) && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    if (visited == members) return false;
  }
  return true;
}

inline bellcc::graphs::CompatibilityGraph random_compat(bellcc::rng::SplitMix64& gen,
                                                        int max_vertices) {
  const int n = 1 + static_cast<int>(gen.next_below(max_vertices));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (gen.next_unit() < 0.4) edges.emplace_back(u, v);
  return make_compat(n, edges);
}

// Random valid experimental graph with at least one edge.
inline bellcc::graphs::ExperimentalGraph random_graph(bellcc::rng::SplitMix64& gen,
                                                      int max_total_vertices,
                                                      int max_parties = 3) {
  using namespace bellcc::graphs;
  ExperimentalGraph g;
  g.parties = 2 + static_cast<int>(gen.next_below(max_parties - 1));
  int budget = max_total_vertices - g.parties;
  for (int p = 0; p < g.parties; ++p) {
    const int extra = static_cast<int>(gen.next_below(std::max(budget / g.parties, 1) + 1));
    g.vertex_counts.push_back(1 + extra);
    budget -= extra;
  }
  long long tuples = 1;
  for (int c : g.vertex_counts) tuples *= c;
  const auto want = 1 + gen.next_below(static_cast<std::uint64_t>(std::min<long long>(tuples, 12)));
  std::set<std::vector<VertexId>> used;
  while (used.size() < want) {
    std::vector<VertexId> tuple;
    for (int p = 0; p < g.parties; ++p)
      tuple.push_back({p, static_cast<int>(gen.next_below(g.vertex_counts[p]))});
    if (!used.insert(tuple).second) continue;
    g.edges.push_back({tuple, gen.next_unit() < 0.5 ? +1 : -1});
  }
  return g;
}

}  // namespace oracle
