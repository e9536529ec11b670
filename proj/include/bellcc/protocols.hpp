#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bellcc/ccproblem.hpp"
#include "bellcc/labeling.hpp"
#include "bellcc/quantum.hpp"

namespace bellcc::protocols {

/// Local deterministic answers with optional shared randomness, represented
/// as a convex mixture of parity assignments.
struct ClassicalStrategy {
  struct Component {
    double weight = 1.0;
    labeling::ParityAssignment assignment;
  };
  std::vector<Component> mixture;

  static ClassicalStrategy deterministic(labeling::ParityAssignment assignment);
};

/// Per-edge nonlocal box: uniformly random outputs whose product always
/// matches the edge sign. Non-signaling (both marginals stay uniform).
struct PRBox {};

struct Empirical {
  double frequency = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct ProtocolOutcome {
  double exact_success = 0.0;
  std::map<std::vector<graphs::VertexId>, double> per_edge_success;
  std::optional<Empirical> empirical;
};

using Protocol = std::variant<ClassicalStrategy, quantum::QuantumStrategy, PRBox>;

/// The optimal classical protocol for the game: broadcast y_k * (-1)^bits
/// using the max-parity assignment.
ClassicalStrategy classical_optimal_strategy(const cc::CCProblem& problem);

ProtocolOutcome classical_exact(const cc::CCProblem& problem,
                                const ClassicalStrategy& strat);

ProtocolOutcome quantum_exact(const cc::CCProblem& problem,
                              const quantum::QuantumStrategy& strat);

ProtocolOutcome prbox_exact(const cc::CCProblem& problem);

/// Monte Carlo run: inputs drawn from the game distribution, outcomes from
/// the strategy (Born sampling for quantum strategies), one broadcast bit
/// per party, answer scored against F. Deterministic in (samples, seed)
/// regardless of `threads`; the matching exact outcome is attached.
ProtocolOutcome simulate(const cc::CCProblem& problem, const Protocol& protocol,
                         std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// Exhaustive search over one party's broadcast functions with the receiver
/// completed by conditional majority, run in both directions. Two-party
/// games only; per-party function space capped at 2^20.
double brute_force_classical_optimum(const cc::CCProblem& problem);

}  // namespace bellcc::protocols
