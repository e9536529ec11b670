#pragma once

#include <vector>

#include "bellcc/graphs.hpp"

namespace bellcc::labeling {

/// Non-negative integer relabeling of the vertices, flat vertex order.
/// Distinct edges have distinct label sums.
struct Labeling {
  std::vector<long long> labels;
};

/// 0/1 bits per vertex (flat order). An edge is satisfied when its bit sum
/// has the parity encoded by the edge sign (even for positive, odd for
/// negative edges).
struct ParityAssignment {
  std::vector<int> bits;
  std::vector<int> satisfied_edges;  // indices into graph.edges
};

/// Positional labeling: vertex (k, i) gets i times the product of the
/// earlier parties' vertex counts, so every vertex tuple has a distinct
/// sum. Each new label exceeds every edge sum formable from earlier ones.
Labeling distinct_sum_labeling(const graphs::ExperimentalGraph& g);

/// Bits maximizing the number of parity-satisfied edges. Delegates to the
/// exact assignment enumeration: 2*|satisfied| - |E| equals the LHV bound.
ParityAssignment max_parity_assignment(const graphs::ExperimentalGraph& g);

bool edge_satisfied(const graphs::ExperimentalGraph& g, const ParityAssignment& a,
                    std::size_t edge_index);

}  // namespace bellcc::labeling
