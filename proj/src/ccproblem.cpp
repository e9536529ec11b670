#include "bellcc/ccproblem.hpp"

#include <sstream>
#include <stdexcept>

namespace bellcc::cc {

CCProblem compile(const graphs::ExperimentalGraph& g) {
  graphs::require_valid(g);
  if (g.edges.empty())
    throw std::invalid_argument("cannot compile a graph with no edges into a game");

  CCProblem problem;
  problem.graph = g;
  for (const graphs::SignedEdge& e : g.edges)
    problem.target.value[graphs::party_ordered(e)] = e.sign > 0 ? 0 : 1;
  problem.distribution.support_size =
      (std::uint64_t{1} << g.parties) * g.edges.size();
  problem.distribution.point_mass = 1.0 / static_cast<double>(problem.distribution.support_size);
  problem.broadcast_bits_per_party = 1;
  // Compilation is allowed for untestable graphs; the report travels along.
  problem.testability = graphs::check_testability(g);
  return problem;
}

std::optional<int> evaluate_F(const CCProblem& problem,
                              const std::vector<PartyInput>& inputs) {
  const graphs::ExperimentalGraph& g = problem.graph;
  if (static_cast<int>(inputs.size()) != g.parties)
    throw std::invalid_argument("need exactly one (setting, y) pair per party");

  std::vector<graphs::VertexId> tuple;
  tuple.reserve(inputs.size());
  int y_product = 1;
  for (int k = 0; k < g.parties; ++k) {
    const PartyInput& in = inputs[k];
    if (in.setting < 0 || in.setting >= g.vertex_counts[k]) {
      std::ostringstream os;
      os << "setting " << in.setting << " out of range for party " << k;
      throw std::out_of_range(os.str());
    }
    if (in.y != 1 && in.y != -1) throw std::invalid_argument("y must be +1 or -1");
    tuple.push_back({k, in.setting});
    y_product *= in.y;
  }

  auto it = problem.target.value.find(tuple);
  if (it == problem.target.value.end()) return std::nullopt;
  return y_product * (it->second == 0 ? 1 : -1);
}

ValueTable value_table(const CCProblem& problem) {
  const graphs::ExperimentalGraph& g = problem.graph;
  if (g.parties != 2)
    throw std::invalid_argument("value tables are defined for two-party games only");

  ValueTable table;
  table.alice_settings = g.vertex_counts[0];
  table.bob_settings = g.vertex_counts[1];
  const int ys[2] = {+1, -1};
  table.cells.resize(2 * table.bob_settings,
                     std::vector<std::optional<int>>(2 * table.alice_settings));
  for (int xb = 0; xb < table.bob_settings; ++xb)
    for (int ib = 0; ib < 2; ++ib)
      for (int xa = 0; xa < table.alice_settings; ++xa)
        for (int ia = 0; ia < 2; ++ia)
          table.cells[2 * xb + ib][2 * xa + ia] =
              evaluate_F(problem, {{xa, ys[ia]}, {xb, ys[ib]}});
  return table;
}

namespace {

std::string header_pair(int setting, int y_slot) {
  std::ostringstream os;
  os << "(" << setting + 1 << "," << (y_slot == 0 ? "+1" : "-1") << ")";
  return os.str();
}

}  // namespace

std::string to_csv(const ValueTable& table) {
  std::ostringstream os;
  for (int xa = 0; xa < table.alice_settings; ++xa)
    for (int ia = 0; ia < 2; ++ia) os << "," << header_pair(xa, ia);
  os << "\n";
  for (int xb = 0; xb < table.bob_settings; ++xb) {
    for (int ib = 0; ib < 2; ++ib) {
      os << header_pair(xb, ib);
      for (const auto& cell : table.cells[2 * xb + ib])
        os << "," << (cell.has_value() ? std::to_string(*cell) : "-");
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace bellcc::cc
