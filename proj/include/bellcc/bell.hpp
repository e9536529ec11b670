#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bellcc/graphs.hpp"
#include "bellcc/quantum.hpp"

namespace bellcc::bell {

/// Maximum vertex count for exhaustive assignment enumeration.
inline constexpr int kEnumerationGuard = 30;

/// One real correlator per edge, keyed by the party-ordered vertex tuple.
struct CorrelatorTable {
  std::map<std::vector<graphs::VertexId>, double> entries;

  void set(const graphs::SignedEdge& e, double value);
  double at(const graphs::SignedEdge& e) const;
};

/// Total +-1 assignment over all vertices, in party-major flat order.
struct DeterministicAssignment {
  std::vector<int> values;

  int at(const graphs::ExperimentalGraph& g, const graphs::VertexId& v) const {
    return values[g.flat_index(v)];
  }
};

struct LhvResult {
  double bound = 0.0;
  DeterministicAssignment argmax;
};

struct BellBounds {
  double lhv = 0.0;
  double ns = 0.0;
  std::optional<double> quantum_lower;
  DeterministicAssignment argmax;
};

/// Signed sum of correlators over the edges.
double bell_value(const graphs::ExperimentalGraph& g, const CorrelatorTable& corr);

/// Exact maximum of the test function over all deterministic assignments,
/// by Gray-code enumeration; ties resolved toward the lexicographically
/// smallest assignment (+1 before -1, flat vertex order). `threads` = 0
/// picks a count automatically; the result is independent of it.
LhvResult lhv_bound(const graphs::ExperimentalGraph& g, int threads = 0);

/// Algebraic maximum |E|: every correlator saturable independently.
double ns_bound(const graphs::ExperimentalGraph& g);

/// Quantum maximum of the 2m-cycle test function, 2m*cos(pi/2m).
double cycle_tsirelson(int m);

CorrelatorTable correlators_from_strategy(const graphs::ExperimentalGraph& g,
                                          const quantum::QuantumStrategy& strat);

/// Bell value of a deterministic assignment (helper shared with the parity
/// machinery and the protocol evaluators).
long long assignment_value(const graphs::ExperimentalGraph& g,
                           const DeterministicAssignment& a);

}  // namespace bellcc::bell
