#include "bellcc/labeling.hpp"

#include <algorithm>

#include "bellcc/bell.hpp"

namespace bellcc::labeling {

Labeling distinct_sum_labeling(const graphs::ExperimentalGraph& g) {
  graphs::require_valid(g);
  Labeling out;
  out.labels.resize(g.total_vertices());
  long long weight = 1;
  for (int p = 0; p < g.parties; ++p) {
    for (int i = 0; i < g.vertex_counts[p]; ++i)
      out.labels[g.flat_index({p, i})] = i * weight;
    weight *= std::max(g.vertex_counts[p], 1);
  }
  return out;
}

bool edge_satisfied(const graphs::ExperimentalGraph& g, const ParityAssignment& a,
                    std::size_t edge_index) {
  const graphs::SignedEdge& e = g.edges[edge_index];
  int parity = 0;
  for (const graphs::VertexId& v : e.vertices) parity ^= a.bits[g.flat_index(v)] & 1;
  const int target = e.sign > 0 ? 0 : 1;
  return parity == target;
}

ParityAssignment max_parity_assignment(const graphs::ExperimentalGraph& g) {
  // v(u) = (-1)^bits(u) identifies parity satisfaction with sign
  // satisfaction, so the LHV argmax is also the max-parity assignment.
  bell::LhvResult lhv = bell::lhv_bound(g);
  ParityAssignment out;
  out.bits.resize(lhv.argmax.values.size());
  for (std::size_t u = 0; u < out.bits.size(); ++u)
    out.bits[u] = lhv.argmax.values[u] > 0 ? 0 : 1;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (edge_satisfied(g, out, e)) out.satisfied_edges.push_back(static_cast<int>(e));
  return out;
}

}  // namespace bellcc::labeling
