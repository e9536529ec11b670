#include "bellcc/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bellcc::graphs {

int ExperimentalGraph::total_vertices() const {
  return std::accumulate(vertex_counts.begin(), vertex_counts.end(), 0);
}

int ExperimentalGraph::flat_index(const VertexId& v) const {
  int offset = 0;
  for (int p = 0; p < v.party; ++p) offset += vertex_counts[p];
  return offset + v.index;
}

VertexId ExperimentalGraph::vertex_at(int flat) const {
  for (int p = 0; p < parties; ++p) {
    if (flat < vertex_counts[p]) return {p, flat};
    flat -= vertex_counts[p];
  }
  throw std::out_of_range("flat vertex id out of range");
}

std::vector<VertexId> party_ordered(const SignedEdge& e) {
  std::vector<VertexId> tuple = e.vertices;
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

bool CompatibilityGraph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

ValidationReport validate(const ExperimentalGraph& g) {
  ValidationReport report;
  auto issue = [&report](const std::string& msg) { report.issues.push_back(msg); };

  if (g.parties < 2) issue("graph must have at least two parties");
  if (static_cast<int>(g.vertex_counts.size()) != g.parties)
    issue("vertex_counts length does not match the number of parties");
  for (std::size_t p = 0; p < g.vertex_counts.size(); ++p) {
    if (g.vertex_counts[p] < 0) {
      std::ostringstream os;
      os << "party " << p << " has a negative vertex count";
      issue(os.str());
    }
  }

  std::map<std::vector<VertexId>, std::size_t> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const SignedEdge& e = g.edges[i];
    std::ostringstream tag;
    tag << "edge " << i << ": ";

    if (e.sign != 1 && e.sign != -1) issue(tag.str() + "sign must be +1 or -1");

    std::vector<int> per_party(std::max(g.parties, 0), 0);
    bool parties_ok = true;
    for (const VertexId& v : e.vertices) {
      if (v.party < 0 || v.party >= g.parties) {
        parties_ok = false;
        continue;
      }
      per_party[v.party]++;
      if (v.party < static_cast<int>(g.vertex_counts.size()) &&
          (v.index < 0 || v.index >= g.vertex_counts[v.party])) {
        std::ostringstream os;
        os << tag.str() << "vertex index " << v.index << " out of range for party " << v.party;
        issue(os.str());
      }
    }
    for (int c : per_party)
      if (c != 1) parties_ok = false;
    if (!parties_ok || static_cast<int>(e.vertices.size()) != g.parties)
      issue(tag.str() + "not one-per-party");

    std::vector<VertexId> key = e.vertices;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = seen.emplace(std::move(key), i);
    if (!inserted) {
      std::ostringstream os;
      os << tag.str() << "duplicate edge (same vertices as edge " << it->second << ")";
      issue(os.str());
    }
  }
  return report;
}

void require_valid(const ExperimentalGraph& g) {
  ValidationReport report = validate(g);
  if (report.valid()) return;
  std::ostringstream os;
  os << "invalid experimental graph:";
  for (const auto& msg : report.issues) os << "\n  - " << msg;
  throw std::invalid_argument(os.str());
}

CompatibilityGraph derive_compatibility_graph(const ExperimentalGraph& g) {
  require_valid(g);
  const int n = g.total_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const SignedEdge& e : g.edges) {
    for (std::size_t a = 0; a < e.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < e.vertices.size(); ++b) {
        int u = g.flat_index(e.vertices[a]);
        int v = g.flat_index(e.vertices[b]);
        adj[u][v] = adj[v][u] = 1;
      }
    }
  }
  CompatibilityGraph cg;
  cg.vertex_count = n;
  cg.adjacency.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj[u][v]) cg.adjacency[u].push_back(v);
  return cg;
}

namespace {

// Lexicographic BFS by partition refinement. Returns the visit order.
std::vector<int> lex_bfs(const CompatibilityGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) adj[u][v] = 1;

  std::vector<std::vector<int>> buckets;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    buckets.push_back(std::move(all));
  }
  std::vector<int> order;
  order.reserve(n);
  while (!buckets.empty()) {
    int v = buckets.front().front();
    buckets.front().erase(buckets.front().begin());
    if (buckets.front().empty()) buckets.erase(buckets.begin());
    order.push_back(v);

    std::vector<std::vector<int>> refined;
    refined.reserve(buckets.size() * 2);
    for (auto& bucket : buckets) {
      std::vector<int> hit, miss;
      for (int u : bucket) (adj[v][u] ? hit : miss).push_back(u);
      if (!hit.empty()) refined.push_back(std::move(hit));
      if (!miss.empty()) refined.push_back(std::move(miss));
    }
    buckets = std::move(refined);
  }
  return order;
}

}  // namespace

bool is_chordal(const CompatibilityGraph& g) {
  const int n = g.vertex_count;
  if (n <= 3) return true;

  // The reverse of a lex-BFS order is a perfect elimination ordering iff the
  // graph is chordal (verified below in O(V+E)).
  std::vector<int> order = lex_bfs(g);
  std::vector<int> pos(n);  // elimination position
  for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;

  for (int v = 0; v < n; ++v) {
    int parent = -1;
    std::vector<int> later;
    for (int u : g.adjacency[v]) {
      if (pos[u] > pos[v]) {
        later.push_back(u);
        if (parent == -1 || pos[u] < pos[parent]) parent = u;
      }
    }
    for (int u : later) {
      if (u == parent) continue;
      if (!g.adjacent(parent, u)) return false;
    }
  }
  return true;
}

namespace {

bool is_single_cycle(const CompatibilityGraph& g) {
  const int n = g.vertex_count;
  if (n < 3) return false;
  std::size_t edge_count = 0;
  for (int u = 0; u < n; ++u) {
    if (g.adjacency[u].size() != 2) return false;
    edge_count += g.adjacency[u].size();
  }
  if (edge_count != 2 * static_cast<std::size_t>(n)) return false;
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : g.adjacency[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return visited == n;
}

}  // namespace

TestabilityReport check_testability(const ExperimentalGraph& g) {
  require_valid(g);
  TestabilityReport report;
  CompatibilityGraph cg = derive_compatibility_graph(g);
  report.non_chordal = !is_chordal(cg);
  for (const SignedEdge& e : g.edges)
    if (e.sign < 0) report.negative_edges++;
  // The parity condition is stated for two-party cycle graphs only;
  // n-party hypergraphs are screened by non-chordality alone.
  report.parity_applicable = (g.parties == 2) && is_single_cycle(cg);
  report.negative_parity_odd = report.negative_edges % 2 == 1;
  report.testable =
      report.non_chordal && (!report.parity_applicable || report.negative_parity_odd);
  return report;
}

}  // namespace bellcc::graphs
