#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bellcc/graphs.hpp"
#include "bellcc/quantum.hpp"

namespace bellcc::quantum {

inline constexpr std::uint64_t kDefaultOptimizerSeed = 1;

struct PlanarOptimum {
  QuantumStrategy strategy;
  double value = 0.0;
  std::vector<double> angles;  // flat vertex order, x-z plane
};

/// Coordinate ascent over per-vertex x-z Bloch angles on the singlet, for
/// two-party graphs. Each sweep optimizes every angle in turn on a grid of
/// `resolution` points; `restarts` random starts plus one start derived
/// from the best deterministic assignment (so the result never falls below
/// the LHV bound). An explicit `initial` angle vector adds one more start.
/// Ties across starts keep the earliest one. The returned value is attained
/// by the returned strategy, hence a certified lower bound on the quantum
/// maximum.
PlanarOptimum optimize_planar_strategy(const graphs::ExperimentalGraph& g,
                                       int resolution, int sweeps, int restarts = 8,
                                       std::uint64_t seed = kDefaultOptimizerSeed,
                                       const std::optional<std::vector<double>>& initial =
                                           std::nullopt);

}  // namespace bellcc::quantum
