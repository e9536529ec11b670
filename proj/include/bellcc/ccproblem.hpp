#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bellcc/graphs.hpp"

namespace bellcc::cc {

/// t(e) = 0 on positive edges, 1 on negative edges; undefined elsewhere.
struct TargetFunction {
  std::map<std::vector<graphs::VertexId>, int> value;
};

/// Uniform distribution over (edge, y-tuple) pairs.
struct InputDistribution {
  double point_mass = 0.0;
  std::uint64_t support_size = 0;
};

/// The compiled game: each party k holds (x_k, y_k) with y_k = +-1 and the
/// promise that the settings tuple is an edge; everyone broadcasts one bit
/// and must output F = (prod_k y_k) * (-1)^t(x_1..x_n).
struct CCProblem {
  graphs::ExperimentalGraph graph;
  TargetFunction target;
  InputDistribution distribution;
  int broadcast_bits_per_party = 1;
  graphs::TestabilityReport testability;
};

CCProblem compile(const graphs::ExperimentalGraph& g);

struct PartyInput {
  int setting = 0;
  int y = +1;
};

/// F on the promise set, std::nullopt off it. Throws on out-of-range
/// settings or y outside {+1, -1}.
std::optional<int> evaluate_F(const CCProblem& problem,
                              const std::vector<PartyInput>& inputs);

/// Full two-party value matrix; rows are (x_B, y_B), columns (x_A, y_A),
/// both ordered by setting then y = +1, -1.
struct ValueTable {
  int alice_settings = 0;
  int bob_settings = 0;
  std::vector<std::vector<std::optional<int>>> cells;  // [row][col]
};

ValueTable value_table(const CCProblem& problem);

/// CSV with 1-based "(x,y)" headers and cells "1", "-1" or "-".
std::string to_csv(const ValueTable& table);

}  // namespace bellcc::cc
