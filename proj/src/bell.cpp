#include "bellcc/bell.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bellcc::bell {

void CorrelatorTable::set(const graphs::SignedEdge& e, double value) {
  if (std::abs(value) > 1.0 + 1e-10)
    throw std::invalid_argument("correlator magnitude exceeds 1");
  entries[graphs::party_ordered(e)] = value;
}

double CorrelatorTable::at(const graphs::SignedEdge& e) const {
  auto it = entries.find(graphs::party_ordered(e));
  if (it == entries.end())
    throw std::out_of_range("correlator table has no entry for an edge of the graph");
  return it->second;
}

double bell_value(const graphs::ExperimentalGraph& g, const CorrelatorTable& corr) {
  graphs::require_valid(g);
  double sum = 0.0;
  for (const graphs::SignedEdge& e : g.edges) sum += e.sign * corr.at(e);
  return sum;
}

namespace {

struct Best {
  long long value = 0;
  std::uint64_t mask = 0;  // bit u set <=> vertex u assigned -1
  bool set = false;
};

// Lexicographic order over (v_0, v_1, ...) with +1 before -1: the first
// differing vertex with +1 wins.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int bit = std::countr_zero(diff);
  return ((a >> bit) & 1u) == 0;
}

void merge(Best& into, const Best& candidate) {
  if (!candidate.set) return;
  if (!into.set || candidate.value > into.value ||
      (candidate.value == into.value && lex_less(candidate.mask, into.mask)))
    into = candidate;
}

// Scans Gray codes of [lo, hi), flipping one vertex per step and updating
// the per-edge products incrementally.
Best scan_range(const graphs::ExperimentalGraph& g,
                const std::vector<std::vector<int>>& edges_at_vertex,
                const std::vector<std::vector<int>>& edge_vertices, std::uint64_t lo,
                std::uint64_t hi) {
  Best best;
  if (lo >= hi) return best;
  const int n = g.total_vertices();
  const std::size_t ne = g.edges.size();

  std::uint64_t mask = lo ^ (lo >> 1);
  std::vector<int> v(n);
  for (int u = 0; u < n; ++u) v[u] = ((mask >> u) & 1u) ? -1 : +1;

  std::vector<long long> term(ne);
  long long value = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    long long prod = g.edges[e].sign;
    for (int u : edge_vertices[e]) prod *= v[u];
    term[e] = prod;
    value += prod;
  }
  merge(best, {value, mask, true});

  for (std::uint64_t k = lo + 1; k < hi; ++k) {
    const int u = std::countr_zero(k);
    mask ^= (std::uint64_t{1} << u);
    v[u] = -v[u];
    for (int e : edges_at_vertex[u]) {
      value -= 2 * term[e];
      term[e] = -term[e];
    }
    merge(best, {value, mask, true});
  }
  return best;
}

}  // namespace

LhvResult lhv_bound(const graphs::ExperimentalGraph& g, int threads) {
  graphs::require_valid(g);
  const int n = g.total_vertices();
  if (n > kEnumerationGuard) {
    std::ostringstream os;
    os << "vertex count " << n << " exceeds the enumeration guard (" << kEnumerationGuard
       << ")";
    throw std::domain_error(os.str());
  }

  std::vector<std::vector<int>> edges_at_vertex(std::max(n, 1));
  std::vector<std::vector<int>> edge_vertices(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (const graphs::VertexId& vid : g.edges[e].vertices) {
      const int u = g.flat_index(vid);
      edges_at_vertex[u].push_back(static_cast<int>(e));
      edge_vertices[e].push_back(u);
    }
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = (n >= 18 && hw > 1) ? static_cast<int>(std::min(hw, 8u)) : 1;
  }

  Best best;
  if (threads == 1 || total < static_cast<std::uint64_t>(threads)) {
    best = scan_range(g, edges_at_vertex, edge_vertices, 0, total);
  } else {
    std::vector<Best> partial(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = (t + 1 == threads) ? total : lo + chunk;
      pool.emplace_back([&, t, lo, hi] {
        partial[t] = scan_range(g, edges_at_vertex, edge_vertices, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
    for (const Best& b : partial) merge(best, b);
  }

  LhvResult result;
  result.bound = static_cast<double>(best.value);
  result.argmax.values.resize(n);
  for (int u = 0; u < n; ++u)
    result.argmax.values[u] = ((best.mask >> u) & 1u) ? -1 : +1;
  return result;
}

double ns_bound(const graphs::ExperimentalGraph& g) {
  graphs::require_valid(g);
  return static_cast<double>(g.edges.size());
}

double cycle_tsirelson(int m) {
  if (m < 2) throw std::invalid_argument("cycle_tsirelson requires m >= 2");
  return 2.0 * m * std::cos(std::numbers::pi / (2 * m));
}

CorrelatorTable correlators_from_strategy(const graphs::ExperimentalGraph& g,
                                          const quantum::QuantumStrategy& strat) {
  graphs::require_valid(g);
  CorrelatorTable table;
  for (const graphs::SignedEdge& e : g.edges) {
    std::vector<quantum::Observable> obs;
    obs.reserve(e.vertices.size());
    for (const graphs::VertexId& vid : graphs::party_ordered(e)) {
      auto it = strat.observables.find(vid);
      if (it == strat.observables.end()) {
        std::ostringstream os;
        os << "strategy has no observable for vertex (" << vid.party << ", " << vid.index
           << ")";
        throw std::out_of_range(os.str());
      }
      obs.push_back(it->second);
    }
    table.set(e, quantum::correlator(strat.state, obs));
  }
  return table;
}

long long assignment_value(const graphs::ExperimentalGraph& g,
                           const DeterministicAssignment& a) {
  long long sum = 0;
  for (const graphs::SignedEdge& e : g.edges) {
    long long prod = e.sign;
    for (const graphs::VertexId& vid : e.vertices) prod *= a.at(g, vid);
    sum += prod;
  }
  return sum;
}

}  // namespace bellcc::bell
