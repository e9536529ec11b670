#include "bellcc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bellcc/bell.hpp"
#include "bellcc/rng.hpp"

namespace bellcc::protocols {

ClassicalStrategy ClassicalStrategy::deterministic(labeling::ParityAssignment assignment) {
  ClassicalStrategy strat;
  strat.mixture.push_back({1.0, std::move(assignment)});
  return strat;
}

ClassicalStrategy classical_optimal_strategy(const cc::CCProblem& problem) {
  return ClassicalStrategy::deterministic(labeling::max_parity_assignment(problem.graph));
}

namespace {

void check_mixture(const cc::CCProblem& problem, const ClassicalStrategy& strat) {
  if (strat.mixture.empty())
    throw std::invalid_argument("classical strategy has no components");
  const std::size_t n = static_cast<std::size_t>(problem.graph.total_vertices());
  double total = 0.0;
  for (const auto& component : strat.mixture) {
    if (component.weight < 0.0)
      throw std::invalid_argument("classical strategy weights must be non-negative");
    if (component.assignment.bits.size() != n)
      throw std::invalid_argument("classical strategy does not cover all vertices");
    total += component.weight;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("classical strategy weights must sum to 1");
}

double mean_per_edge(const ProtocolOutcome& outcome, std::size_t edge_count) {
  double sum = 0.0;
  for (const auto& [edge, p] : outcome.per_edge_success) sum += p;
  return sum / static_cast<double>(edge_count);
}

}  // namespace

ProtocolOutcome classical_exact(const cc::CCProblem& problem,
                                const ClassicalStrategy& strat) {
  check_mixture(problem, strat);
  const graphs::ExperimentalGraph& g = problem.graph;
  ProtocolOutcome outcome;
  long long satisfied = 0;  // exact path for the deterministic case
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    double p = 0.0;
    for (const auto& component : strat.mixture)
      if (labeling::edge_satisfied(g, component.assignment, e)) p += component.weight;
    if (strat.mixture.size() == 1) {
      p = labeling::edge_satisfied(g, strat.mixture[0].assignment, e) ? 1.0 : 0.0;
      satisfied += p > 0.5 ? 1 : 0;
    }
    outcome.per_edge_success[graphs::party_ordered(g.edges[e])] = p;
  }
  outcome.exact_success =
      strat.mixture.size() == 1
          ? static_cast<double>(satisfied) / static_cast<double>(g.edges.size())
          : mean_per_edge(outcome, g.edges.size());
  return outcome;
}

ProtocolOutcome quantum_exact(const cc::CCProblem& problem,
                              const quantum::QuantumStrategy& strat) {
  const graphs::ExperimentalGraph& g = problem.graph;
  const bell::CorrelatorTable table = bell::correlators_from_strategy(g, strat);
  ProtocolOutcome outcome;
  for (const graphs::SignedEdge& e : g.edges)
    outcome.per_edge_success[graphs::party_ordered(e)] = (1.0 + e.sign * table.at(e)) / 2.0;
  outcome.exact_success = mean_per_edge(outcome, g.edges.size());
  return outcome;
}

ProtocolOutcome prbox_exact(const cc::CCProblem& problem) {
  if (problem.graph.parties != 2)
    throw std::invalid_argument("the nonlocal box protocol is defined for two parties");
  ProtocolOutcome outcome;
  for (const graphs::SignedEdge& e : problem.graph.edges)
    outcome.per_edge_success[graphs::party_ordered(e)] = 1.0;
  outcome.exact_success = 1.0;
  return outcome;
}

namespace {

// Flattened per-edge data for the sampling loop.
struct EdgeInfo {
  std::vector<int> flat_vertices;  // party order
  int sign = +1;
};

std::vector<EdgeInfo> edge_infos(const graphs::ExperimentalGraph& g) {
  std::vector<EdgeInfo> infos;
  infos.reserve(g.edges.size());
  for (const graphs::SignedEdge& e : g.edges) {
    EdgeInfo info;
    info.sign = e.sign;
    for (const graphs::VertexId& v : graphs::party_ordered(e))
      info.flat_vertices.push_back(g.flat_index(v));
    infos.push_back(std::move(info));
  }
  return infos;
}

// Joint Born distribution of the edge observables on the strategy state,
// as a CDF over outcome tuples (bit k set <=> party k outputs -1).
std::vector<double> born_cdf(const cc::CCProblem& problem,
                             const quantum::QuantumStrategy& strat,
                             const graphs::SignedEdge& edge) {
  const int n = problem.graph.parties;
  const auto tuple = graphs::party_ordered(edge);
  std::vector<Eigen::MatrixXcd> projectors_plus, projectors_minus;
  for (const graphs::VertexId& v : tuple) {
    const quantum::Observable& obs = strat.observables.at(v);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(obs.dimension(), obs.dimension());
    projectors_plus.push_back((id + obs.matrix) / 2.0);
    projectors_minus.push_back((id - obs.matrix) / 2.0);
  }

  std::vector<double> probs(std::size_t{1} << n);
  double total = 0.0;
  for (std::size_t t = 0; t < probs.size(); ++t) {
    quantum::StateVector cursor = strat.state;
    for (int k = 0; k < n; ++k) {
      const auto& projector = ((t >> k) & 1u) ? projectors_minus[k] : projectors_plus[k];
      cursor.amplitudes = quantum::apply_local(cursor, projector, k);
    }
    const double p = std::max(strat.state.amplitudes.dot(cursor.amplitudes).real(), 0.0);
    probs[t] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::logic_error("edge outcome probabilities do not sum to 1");

  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t t = 0; t < probs.size(); ++t) {
    acc += probs[t] / total;
    cdf[t] = acc;
  }
  cdf.back() = 1.0;
  return cdf;
}

std::size_t pick_from_cdf(const std::vector<double>& cdf, double u) {
  for (std::size_t i = 0; i < cdf.size(); ++i)
    if (u < cdf[i]) return i;
  return cdf.size() - 1;
}

struct SamplingPlan {
  std::vector<EdgeInfo> edges;
  std::vector<int> target;  // t(e), by edge index
  int parties = 0;

  // classical
  std::vector<double> mixture_cdf;
  std::vector<std::vector<int>> component_bits;
  // quantum
  std::vector<std::vector<double>> outcome_cdf;  // by edge index
  // box
  bool prbox = false;

  std::uint64_t run(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed) const;
};

std::uint64_t SamplingPlan::run(std::uint64_t lo, std::uint64_t hi,
                                std::uint64_t seed) const {
  const int n = parties;
  std::uint64_t successes = 0;
  for (std::uint64_t i = lo; i < hi; ++i) {
    rng::SplitMix64 gen = rng::SplitMix64::stream(seed, i);
    const auto e = static_cast<std::size_t>(gen.next_below(edges.size()));
    const std::uint64_t ybits = gen.next();

    int outcome_product = 1;
    if (prbox) {
      // Alice's output is a fair coin; Bob's matches the edge sign.
      outcome_product = edges[e].sign;
      (void)gen.next();
    } else if (!mixture_cdf.empty()) {
      std::size_t c = 0;
      if (mixture_cdf.size() > 1) c = pick_from_cdf(mixture_cdf, gen.next_unit());
      const std::vector<int>& bits = component_bits[c];
      for (int u : edges[e].flat_vertices)
        if (bits[u]) outcome_product = -outcome_product;
    } else {
      const std::size_t t = pick_from_cdf(outcome_cdf[e], gen.next_unit());
      for (int k = 0; k < n; ++k)
        if ((t >> k) & 1u) outcome_product = -outcome_product;
    }

    int y_product = 1;
    for (int k = 0; k < n; ++k)
      if ((ybits >> k) & 1u) y_product = -y_product;

    // Each party broadcasts e_k = y_k * a_k; the shared answer is their
    // product, correct iff it equals F = y_product * (-1)^t(e).
    const int answer = y_product * outcome_product;
    const int f = y_product * (target[e] == 0 ? 1 : -1);
    if (answer == f) ++successes;
  }
  return successes;
}

}  // namespace

ProtocolOutcome simulate(const cc::CCProblem& problem, const Protocol& protocol,
                         std::uint64_t samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("simulate requires at least one sample");

  ProtocolOutcome outcome = std::visit(
      [&](const auto& strat) -> ProtocolOutcome {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, ClassicalStrategy>)
          return classical_exact(problem, strat);
        else if constexpr (std::is_same_v<T, quantum::QuantumStrategy>)
          return quantum_exact(problem, strat);
        else
          return prbox_exact(problem);
      },
      protocol);

  SamplingPlan plan;
  plan.edges = edge_infos(problem.graph);
  plan.parties = problem.graph.parties;
  for (const graphs::SignedEdge& e : problem.graph.edges)
    plan.target.push_back(e.sign > 0 ? 0 : 1);

  if (const auto* strat = std::get_if<ClassicalStrategy>(&protocol)) {
    double acc = 0.0;
    for (const auto& component : strat->mixture) {
      acc += component.weight;
      plan.mixture_cdf.push_back(acc);
      plan.component_bits.push_back(component.assignment.bits);
    }
    plan.mixture_cdf.back() = 1.0;
  } else if (const auto* strat = std::get_if<quantum::QuantumStrategy>(&protocol)) {
    for (const graphs::SignedEdge& e : problem.graph.edges)
      plan.outcome_cdf.push_back(born_cdf(problem, *strat, e));
  } else {
    plan.prbox = true;
  }

  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = (samples >= 262144 && hw > 1) ? static_cast<int>(std::min(hw, 8u)) : 1;
  }

  std::uint64_t successes = 0;
  if (threads == 1) {
    successes = plan.run(0, samples, seed);
  } else {
    std::vector<std::uint64_t> counts(threads, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = samples / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = (t + 1 == threads) ? samples : lo + chunk;
      pool.emplace_back([&, t, lo, hi] { counts[t] = plan.run(lo, hi, seed); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t c : counts) successes += c;
  }

  outcome.empirical =
      Empirical{static_cast<double>(successes) / static_cast<double>(samples), samples, seed};
  return outcome;
}

namespace {

// Success units (integer counts of correctly answered support points) for
// the best receiver completion against a fixed sender broadcast function.
// Sender settings: m_send, receiver settings: m_recv; target[xs][xr] is
// t(e) or -1 off the promise.
long long best_completion_units(int m_send, int m_recv,
                                const std::vector<std::vector<int>>& target,
                                std::uint32_t broadcast_fn) {
  long long units = 0;
  for (int xr = 0; xr < m_recv; ++xr) {
    for (int yr01 = 0; yr01 < 2; ++yr01) {
      for (int ebit = 0; ebit < 2; ++ebit) {
        long long plus = 0, minus = 0;
        for (int xs = 0; xs < m_send; ++xs) {
          if (target[xs][xr] < 0) continue;
          for (int ys01 = 0; ys01 < 2; ++ys01) {
            if (static_cast<int>((broadcast_fn >> (2 * xs + ys01)) & 1u) != ebit) continue;
            const int ys = ys01 ? -1 : +1;
            const int yr = yr01 ? -1 : +1;
            const int f = ys * yr * (target[xs][xr] == 0 ? 1 : -1);
            (f > 0 ? plus : minus)++;
          }
        }
        units += std::max(plus, minus);
      }
    }
  }
  return units;
}

}  // namespace

double brute_force_classical_optimum(const cc::CCProblem& problem) {
  const graphs::ExperimentalGraph& g = problem.graph;
  if (g.parties != 2)
    throw std::invalid_argument("the brute-force oracle covers two-party games only");
  const int ma = g.vertex_counts[0];
  const int mb = g.vertex_counts[1];
  if (2 * ma > 20 || 2 * mb > 20)
    throw std::domain_error("per-party broadcast-function space exceeds 2^20");

  std::vector<std::vector<int>> t_ab(ma, std::vector<int>(mb, -1));
  for (const graphs::SignedEdge& e : g.edges) {
    const auto tuple = graphs::party_ordered(e);
    t_ab[tuple[0].index][tuple[1].index] = e.sign > 0 ? 0 : 1;
  }
  std::vector<std::vector<int>> t_ba(mb, std::vector<int>(ma, -1));
  for (int xa = 0; xa < ma; ++xa)
    for (int xb = 0; xb < mb; ++xb) t_ba[xb][xa] = t_ab[xa][xb];

  // The receiver's completion depends only on (own input, received bit), so
  // the other party's broadcast function never enters its own direction.
  long long best_units = 0;
  for (std::uint32_t fn = 0; fn < (1u << (2 * ma)); ++fn)
    best_units = std::max(best_units, best_completion_units(ma, mb, t_ab, fn));
  for (std::uint32_t fn = 0; fn < (1u << (2 * mb)); ++fn)
    best_units = std::max(best_units, best_completion_units(mb, ma, t_ba, fn));

  return static_cast<double>(best_units) / static_cast<double>(4 * g.edges.size());
}

}  // namespace bellcc::protocols
