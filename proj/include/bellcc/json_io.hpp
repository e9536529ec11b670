#pragma once

#include <string>

#include <json.hpp>

#include "bellcc/bell.hpp"
#include "bellcc/ccproblem.hpp"
#include "bellcc/graphs.hpp"
#include "bellcc/labeling.hpp"
#include "bellcc/protocols.hpp"
#include "bellcc/quantum.hpp"

namespace bellcc::io {

using json = nlohmann::json;

/// Rounds to 9 significant digits so serialized numbers print as the
/// shortest representation of the rounded value.
double round9(double x);

/// {"parties": n, "vertex_counts": [...], "edges": [{"vertices": [i_1..i_n],
///  "sign": +-1}, ...]} with 0-based per-party vertex indices in party order.
/// Schema violations throw std::invalid_argument; structural invariants are
/// not checked here (see graphs::validate).
graphs::ExperimentalGraph graph_from_json(const json& j);
json graph_to_json(const graphs::ExperimentalGraph& g);

/// {"state": "singlet" | {"amplitudes": [[re,im],...], "dims": [...]},
///  "observables": {"party.index": {"bloch": [x,y,z]} | {"matrix": ...}}}
quantum::QuantumStrategy strategy_from_json(const json& j);
json strategy_to_json(const quantum::QuantumStrategy& strat);

json validation_to_json(const graphs::ValidationReport& report);
json testability_to_json(const graphs::TestabilityReport& report);

/// {"lhv": ..., "ns": ..., "quantum_lower": z|null,
///  "argmax_assignment": {"party.index": +-1}}
json bounds_to_json(const graphs::ExperimentalGraph& g, const bell::BellBounds& bounds);

/// {"protocol": ..., "exact": p, "empirical": {...}|null,
///  "per_edge": {"xA-xB-...": p}} keyed by the edge's per-party settings.
json outcome_to_json(const graphs::ExperimentalGraph& g, const std::string& protocol,
                     const protocols::ProtocolOutcome& outcome);

json problem_to_json(const cc::CCProblem& problem, const labeling::Labeling& labels);

}  // namespace bellcc::io
