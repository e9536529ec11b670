#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bellcc::graphs {

/// A measurement setting, identified by (party, per-party index).
struct VertexId {
  int party = 0;
  int index = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// A jointly measured tuple of settings with a +1/-1 coefficient.
struct SignedEdge {
  std::vector<VertexId> vertices;
  int sign = +1;
};

/// Signed n-partite experimental hypergraph: one vertex per edge from each
/// party. For two parties this is an ordinary signed bipartite graph.
struct ExperimentalGraph {
  int parties = 0;
  std::vector<int> vertex_counts;
  std::vector<SignedEdge> edges;

  int total_vertices() const;
  /// Party-major flat id; vertices of party 0 come first.
  int flat_index(const VertexId& v) const;
  VertexId vertex_at(int flat) const;
};

/// Edge vertices sorted by party (the canonical tuple of a valid edge).
std::vector<VertexId> party_ordered(const SignedEdge& e);

struct ValidationReport {
  std::vector<std::string> issues;
  bool valid() const { return issues.empty(); }
};

/// Simple graph on all settings; two settings are adjacent when they occur
/// together in at least one hyperedge.
struct CompatibilityGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists, flat ids

  bool adjacent(int u, int v) const;
};

struct TestabilityReport {
  bool non_chordal = false;
  /// True when the graph is two-party and its compatibility graph is a
  /// single cycle, the only case with an extra sign-parity requirement.
  bool parity_applicable = false;
  int negative_edges = 0;
  bool negative_parity_odd = false;
  bool testable = false;
};

/// Reports every violated structural invariant; empty report iff valid.
ValidationReport validate(const ExperimentalGraph& g);

/// Throws std::invalid_argument listing all issues if the graph is invalid.
void require_valid(const ExperimentalGraph& g);

CompatibilityGraph derive_compatibility_graph(const ExperimentalGraph& g);

/// Perfect-elimination-ordering test via lexicographic BFS.
bool is_chordal(const CompatibilityGraph& g);

/// Necessary conditions for the graph to support a nonlocality test:
/// non-chordal compatibility graph, and for two-party cycles an odd number
/// of negative edges.
TestabilityReport check_testability(const ExperimentalGraph& g);

}  // namespace bellcc::graphs
