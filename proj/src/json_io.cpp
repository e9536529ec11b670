#include "bellcc/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bellcc::io {

double round9(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return std::strtod(buffer, nullptr);
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("schema error: " + what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    schema_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::string vertex_key(const graphs::VertexId& v) {
  std::ostringstream os;
  os << v.party << "." << v.index;
  return os.str();
}

graphs::VertexId vertex_from_key(const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos) schema_error("observable key must look like \"party.index\"");
  try {
    return {std::stoi(key.substr(0, dot)), std::stoi(key.substr(dot + 1))};
  } catch (const std::exception&) {
    schema_error("observable key must look like \"party.index\"");
  }
}

std::string edge_key(const graphs::SignedEdge& e) {
  std::ostringstream os;
  bool first = true;
  for (const graphs::VertexId& v : graphs::party_ordered(e)) {
    if (!first) os << "-";
    os << v.index;
    first = false;
  }
  return os.str();
}

}  // namespace

graphs::ExperimentalGraph graph_from_json(const json& j) {
  graphs::ExperimentalGraph g;
  g.parties = int_field(j, "parties");

  const json& counts = field(j, "vertex_counts");
  if (!counts.is_array()) schema_error("\"vertex_counts\" must be an array");
  for (const json& c : counts) {
    if (!c.is_number_integer()) schema_error("vertex counts must be integers");
    g.vertex_counts.push_back(c.get<int>());
  }

  const json& edges = field(j, "edges");
  if (!edges.is_array()) schema_error("\"edges\" must be an array");
  for (const json& ej : edges) {
    graphs::SignedEdge edge;
    const json& vertices = field(ej, "vertices");
    if (!vertices.is_array()) schema_error("edge \"vertices\" must be an array");
    int party = 0;
    for (const json& v : vertices) {
      if (!v.is_number_integer()) schema_error("edge vertex indices must be integers");
      edge.vertices.push_back({party++, v.get<int>()});
    }
    edge.sign = int_field(ej, "sign");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

json graph_to_json(const graphs::ExperimentalGraph& g) {
  json j;
  j["parties"] = g.parties;
  j["vertex_counts"] = g.vertex_counts;
  j["edges"] = json::array();
  for (const graphs::SignedEdge& e : g.edges) {
    json ej;
    ej["vertices"] = json::array();
    for (const graphs::VertexId& v : graphs::party_ordered(e))
      ej["vertices"].push_back(v.index);
    ej["sign"] = e.sign;
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

quantum::QuantumStrategy strategy_from_json(const json& j) {
  quantum::QuantumStrategy strat;
  const json& state = field(j, "state");
  if (state.is_string() && state.get<std::string>() == "singlet") {
    strat.state = quantum::singlet();
  } else if (state.is_object()) {
    const json& amps = field(state, "amplitudes");
    if (!amps.is_array()) schema_error("\"amplitudes\" must be an array of [re, im] pairs");
    Eigen::VectorXcd amplitudes(amps.size());
    Eigen::Index i = 0;
    for (const json& a : amps) {
      if (!a.is_array() || a.size() != 2) schema_error("amplitudes must be [re, im] pairs");
      amplitudes[i++] = {a[0].get<double>(), a[1].get<double>()};
    }
    std::vector<int> dims;
    for (const json& d : field(state, "dims")) dims.push_back(d.get<int>());
    strat.state = quantum::make_state(std::move(amplitudes), std::move(dims));
  } else {
    schema_error("\"state\" must be \"singlet\" or an object");
  }

  const json& observables = field(j, "observables");
  if (!observables.is_object()) schema_error("\"observables\" must be an object");
  for (const auto& [key, spec] : observables.items()) {
    const graphs::VertexId vid = vertex_from_key(key);
    if (spec.contains("bloch")) {
      const json& b = spec.at("bloch");
      if (!b.is_array() || b.size() != 3) schema_error("\"bloch\" must be a 3-vector");
      strat.observables.emplace(vid, quantum::observable_from_bloch({b[0].get<double>(),
                                                                     b[1].get<double>(),
                                                                     b[2].get<double>()}));
    } else if (spec.contains("matrix")) {
      const json& rows = spec.at("matrix");
      if (!rows.is_array() || rows.empty()) schema_error("\"matrix\" must be a non-empty array");
      const auto d = static_cast<Eigen::Index>(rows.size());
      Eigen::MatrixXcd m(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
          schema_error("\"matrix\" must be square");
        for (Eigen::Index c = 0; c < d; ++c) {
          const json& cell = row[c];
          if (!cell.is_array() || cell.size() != 2)
            schema_error("matrix entries must be [re, im] pairs");
          m(r, c) = {cell[0].get<double>(), cell[1].get<double>()};
        }
      }
      strat.observables.emplace(vid, quantum::observable_from_matrix(std::move(m)));
    } else {
      schema_error("observable needs a \"bloch\" or \"matrix\" field");
    }
  }
  return strat;
}

json strategy_to_json(const quantum::QuantumStrategy& strat) {
  json j;
  const quantum::StateVector reference = quantum::singlet();
  if (strat.state.dims == reference.dims &&
      (strat.state.amplitudes - reference.amplitudes).norm() < 1e-12) {
    j["state"] = "singlet";
  } else {
    json amps = json::array();
    for (Eigen::Index i = 0; i < strat.state.amplitudes.size(); ++i)
      amps.push_back({round9(strat.state.amplitudes[i].real()),
                      round9(strat.state.amplitudes[i].imag())});
    j["state"] = {{"amplitudes", std::move(amps)}, {"dims", strat.state.dims}};
  }
  j["observables"] = json::object();
  for (const auto& [vid, obs] : strat.observables) {
    json spec;
    if (obs.bloch) {
      spec["bloch"] = {round9(obs.bloch->x()), round9(obs.bloch->y()),
                       round9(obs.bloch->z())};
    } else {
      json rows = json::array();
      for (Eigen::Index r = 0; r < obs.matrix.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < obs.matrix.cols(); ++c)
          row.push_back({round9(obs.matrix(r, c).real()), round9(obs.matrix(r, c).imag())});
        rows.push_back(std::move(row));
      }
      spec["matrix"] = std::move(rows);
    }
    j["observables"][vertex_key(vid)] = std::move(spec);
  }
  return j;
}

json validation_to_json(const graphs::ValidationReport& report) {
  return {{"valid", report.valid()}, {"issues", report.issues}};
}

json testability_to_json(const graphs::TestabilityReport& report) {
  json j;
  j["non_chordal"] = report.non_chordal;
  j["parity_check_applicable"] = report.parity_applicable;
  j["negative_edges"] = report.negative_edges;
  if (report.parity_applicable) j["negative_parity_odd"] = report.negative_parity_odd;
  j["testable"] = report.testable;
  return j;
}

json bounds_to_json(const graphs::ExperimentalGraph& g, const bell::BellBounds& bounds) {
  json j;
  j["lhv"] = static_cast<long long>(bounds.lhv);
  j["ns"] = static_cast<long long>(bounds.ns);
  j["quantum_lower"] =
      bounds.quantum_lower ? json(round9(*bounds.quantum_lower)) : json(nullptr);
  json assignment = json::object();
  for (int u = 0; u < g.total_vertices(); ++u)
    assignment[vertex_key(g.vertex_at(u))] = bounds.argmax.values[u];
  j["argmax_assignment"] = std::move(assignment);
  return j;
}

json outcome_to_json(const graphs::ExperimentalGraph& g, const std::string& protocol,
                     const protocols::ProtocolOutcome& outcome) {
  json j;
  j["protocol"] = protocol;
  j["exact"] = round9(outcome.exact_success);
  if (outcome.empirical) {
    j["empirical"] = {{"freq", round9(outcome.empirical->frequency)},
                      {"samples", outcome.empirical->samples},
                      {"seed", outcome.empirical->seed}};
  } else {
    j["empirical"] = nullptr;
  }
  json per_edge = json::object();
  for (const graphs::SignedEdge& e : g.edges)
    per_edge[edge_key(e)] = round9(outcome.per_edge_success.at(graphs::party_ordered(e)));
  j["per_edge"] = std::move(per_edge);
  return j;
}

json problem_to_json(const cc::CCProblem& problem, const labeling::Labeling& labels) {
  json j;
  j["graph"] = graph_to_json(problem.graph);
  json label_map = json::object();
  for (int u = 0; u < problem.graph.total_vertices(); ++u)
    label_map[vertex_key(problem.graph.vertex_at(u))] = labels.labels[u];
  j["labeling"] = std::move(label_map);
  json target = json::array();
  for (const graphs::SignedEdge& e : problem.graph.edges) {
    json entry;
    entry["vertices"] = json::array();
    for (const graphs::VertexId& v : graphs::party_ordered(e))
      entry["vertices"].push_back(v.index);
    entry["t"] = e.sign > 0 ? 0 : 1;
    target.push_back(std::move(entry));
  }
  j["target"] = std::move(target);
  j["distribution"] = {{"point_mass", round9(problem.distribution.point_mass)},
                       {"support_size", problem.distribution.support_size}};
  j["broadcast_bits_per_party"] = problem.broadcast_bits_per_party;
  j["testability"] = testability_to_json(problem.testability);
  return j;
}

}  // namespace bellcc::io
