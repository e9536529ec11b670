#include "bellcc/optimize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bellcc/bell.hpp"
#include "bellcc/rng.hpp"

namespace bellcc::quantum {

namespace {

constexpr double kPi = std::numbers::pi;

struct PlanarObjective {
  // flat endpoint pairs (alice, bob) and signs, plus per-vertex incidence
  std::vector<std::pair<int, int>> endpoints;
  std::vector<int> signs;
  std::vector<std::vector<int>> edges_at_vertex;
  int vertex_count = 0;

  explicit PlanarObjective(const graphs::ExperimentalGraph& g) {
    vertex_count = g.total_vertices();
    edges_at_vertex.resize(vertex_count);
    for (const graphs::SignedEdge& e : g.edges) {
      const auto tuple = graphs::party_ordered(e);
      const int a = g.flat_index(tuple[0]);
      const int b = g.flat_index(tuple[1]);
      edges_at_vertex[a].push_back(static_cast<int>(endpoints.size()));
      edges_at_vertex[b].push_back(static_cast<int>(endpoints.size()));
      endpoints.emplace_back(a, b);
      signs.push_back(e.sign);
    }
  }

  // Singlet correlator of planar directions: E = -cos(theta_a - theta_b).
  double total(const std::vector<double>& theta) const {
    double sum = 0.0;
    for (std::size_t e = 0; e < endpoints.size(); ++e)
      sum += signs[e] * -std::cos(theta[endpoints[e].first] - theta[endpoints[e].second]);
    return sum;
  }

  // Contribution of the edges incident to vertex u if its angle were t.
  double local(const std::vector<double>& theta, int u, double t) const {
    double sum = 0.0;
    for (int e : edges_at_vertex[u]) {
      const auto [a, b] = endpoints[e];
      const double other = (a == u) ? theta[b] : theta[a];
      sum += signs[e] * -std::cos(t - other);
    }
    return sum;
  }
};

void ascend(const PlanarObjective& objective, std::vector<double>& theta, int resolution,
            int sweeps) {
  const double step = 2.0 * kPi / resolution;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int u = 0; u < objective.vertex_count; ++u) {
      double best_value = objective.local(theta, u, theta[u]);
      double best_angle = theta[u];
      for (int k = 0; k < resolution; ++k) {
        const double candidate = k * step;
        const double value = objective.local(theta, u, candidate);
        if (value > best_value) {
          best_value = value;
          best_angle = candidate;
        }
      }
      theta[u] = best_angle;
    }
  }
}

}  // namespace

PlanarOptimum optimize_planar_strategy(const graphs::ExperimentalGraph& g, int resolution,
                                       int sweeps, int restarts, std::uint64_t seed,
                                       const std::optional<std::vector<double>>& initial) {
  graphs::require_valid(g);
  if (g.parties != 2)
    throw std::invalid_argument("the planar optimizer covers two-party graphs only");
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  if (sweeps < 1) throw std::invalid_argument("need at least one sweep");
  if (restarts < 0) throw std::invalid_argument("restarts must be non-negative");
  if (initial && static_cast<int>(initial->size()) != g.total_vertices())
    throw std::invalid_argument("initial angles must cover all vertices");

  const PlanarObjective objective(g);
  const int n = objective.vertex_count;

  std::vector<std::vector<double>> starts;
  // Start 0 encodes the best deterministic assignment as +-Z directions
  // (Bob's side antipodal), whose planar value equals the LHV bound.
  {
    const bell::LhvResult lhv = bell::lhv_bound(g);
    std::vector<double> theta(n);
    for (int u = 0; u < n; ++u) {
      const bool plus = lhv.argmax.values[u] > 0;
      const bool alice = g.vertex_at(u).party == 0;
      theta[u] = (plus == alice) ? kPi / 2.0 : 3.0 * kPi / 2.0;
    }
    starts.push_back(std::move(theta));
  }
  for (int r = 0; r < restarts; ++r) {
    rng::SplitMix64 gen = rng::SplitMix64::stream(seed, static_cast<std::uint64_t>(r));
    std::vector<double> theta(n);
    for (int u = 0; u < n; ++u)
      theta[u] = 2.0 * kPi * static_cast<double>(gen.next_below(resolution)) / resolution;
    starts.push_back(std::move(theta));
  }
  if (initial) starts.push_back(*initial);

  PlanarOptimum best;
  bool have_best = false;
  for (auto& theta : starts) {
    ascend(objective, theta, resolution, sweeps);
    const double value = objective.total(theta);
    if (!have_best || value > best.value) {
      best.value = value;
      best.angles = theta;
      have_best = true;
    }
  }

  best.strategy.state = singlet();
  for (int u = 0; u < n; ++u)
    best.strategy.observables.emplace(
        g.vertex_at(u),
        observable_from_bloch({std::cos(best.angles[u]), 0.0, std::sin(best.angles[u])}));
  return best;
}

}  // namespace bellcc::quantum
