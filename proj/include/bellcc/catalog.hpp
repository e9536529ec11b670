#pragma once

#include <optional>

#include "bellcc/graphs.hpp"

namespace bellcc::graphs {

/// 2m-cycle A_1-B_1-A_2-B_2-...-A_m-B_m-A_1 with edges in cycle order.
/// Every edge is positive except the closing edge (A_1, B_m); with that
/// layout cycle_strategy(m) attains the Bell value 2m*cos(pi/2m).
ExperimentalGraph cycle_graph(int m);

/// The 4-cycle with a single negative edge; equals cycle_graph(2).
ExperimentalGraph chsh_graph();

/// 6-cycle whose sign layout matches the bundled value table: negative
/// edge at (A_3, B_3) instead of the closing edge.
ExperimentalGraph six_cycle_graph();

/// Two settings for Alice, three for Bob; all pairs present, with
/// (A_2, B_3) the single negative edge.
ExperimentalGraph g23_graph();

/// Detects the cycle_graph(m) edge layout (ignoring signs) and returns m.
std::optional<int> detect_canonical_cycle(const ExperimentalGraph& g);

}  // namespace bellcc::graphs
