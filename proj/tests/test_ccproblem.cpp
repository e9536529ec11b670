#include <doctest.h>

#include <stdexcept>
#include <string>

#include "bellcc/catalog.hpp"
#include "bellcc/ccproblem.hpp"
#include "oracles.hpp"

using namespace bellcc;

namespace {

// The 6-cycle value matrix, rows (x_B, y_B), columns (x_A, y_A), both in
// order (1,+1),(1,-1),(2,+1),(2,-1),(3,+1),(3,-1); 0 marks undefined.
constexpr int kSixCycleTable[6][6] = {
    {1, -1, 1, -1, 0, 0},    //
    {-1, 1, -1, 1, 0, 0},    //
    {0, 0, 1, -1, 1, -1},    //
    {0, 0, -1, 1, -1, 1},    //
    {1, -1, 0, 0, -1, 1},    //
    {-1, 1, 0, 0, 1, -1},    //
};

}  // namespace

TEST_CASE("compiled problems carry the target, budget and distribution") {
  const auto problem = cc::compile(graphs::chsh_graph());
  CHECK(problem.broadcast_bits_per_party == 1);
  CHECK(problem.distribution.support_size == 16);
  CHECK(problem.distribution.point_mass == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(problem.distribution.point_mass * problem.distribution.support_size ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(problem.target.value.at({{0, 0}, {1, 1}}) == 1);  // the negative edge
  CHECK(problem.target.value.at({{0, 0}, {1, 0}}) == 0);
  CHECK(problem.testability.testable);
}

TEST_CASE("compiling an edgeless graph fails") {
  graphs::ExperimentalGraph g;
  g.parties = 2;
  g.vertex_counts = {1, 1};
  CHECK_THROWS_AS(cc::compile(g), std::invalid_argument);
}

TEST_CASE("the 4-cycle game is the CHSH language up to one setting relabel") {
  // F(x_A, y_A; x_B, y_B) = y_A y_B (-1)^(x'_A AND x_B) with x'_A = 1 - x_A.
  const auto problem = cc::compile(graphs::chsh_graph());
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int ya : {+1, -1})
        for (int yb : {+1, -1}) {
          const auto f = cc::evaluate_F(problem, {{xa, ya}, {xb, yb}});
          REQUIRE(f.has_value());
          const int t = (1 - xa) & xb;
          CHECK(*f == ya * yb * (t ? -1 : 1));
        }
}

TEST_CASE("6-cycle values match the reference table entries") {
  const auto problem = cc::compile(graphs::six_cycle_graph());
  // 1-based (1,+1),(1,+1) -> +1 and (3,+1),(3,+1) -> -1
  CHECK(cc::evaluate_F(problem, {{0, +1}, {0, +1}}) == 1);
  CHECK(cc::evaluate_F(problem, {{2, +1}, {2, +1}}) == -1);
  // (1, y_A) against (3, y_B) is the positive closing edge
  for (int ya : {+1, -1})
    for (int yb : {+1, -1})
      CHECK(cc::evaluate_F(problem, {{0, ya}, {2, yb}}) == ya * yb);
  // (1, .) with (2, .) is off the promise
  CHECK_FALSE(cc::evaluate_F(problem, {{0, +1}, {1, +1}}).has_value());
}

TEST_CASE("evaluate_F validates its inputs") {
  const auto problem = cc::compile(graphs::chsh_graph());
  CHECK_THROWS_AS(cc::evaluate_F(problem, {{2, +1}, {0, +1}}), std::out_of_range);
  CHECK_THROWS_AS(cc::evaluate_F(problem, {{0, 0}, {0, +1}}), std::invalid_argument);
  CHECK_THROWS_AS(cc::evaluate_F(problem, {{0, +1}}), std::invalid_argument);
}

TEST_CASE("value table of the bundled 6-cycle reproduces the table cell-for-cell") {
  const auto table = cc::value_table(cc::compile(graphs::six_cycle_graph()));
  REQUIRE(table.cells.size() == 6);
  int defined = 0;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      const auto& cell = table.cells[r][c];
      if (kSixCycleTable[r][c] == 0) {
        CHECK_FALSE(cell.has_value());
      } else {
        REQUIRE(cell.has_value());
        CHECK(*cell == kSixCycleTable[r][c]);
        ++defined;
      }
    }
  CHECK(defined == 24);
}

TEST_CASE("value table corner cases") {
  const auto chsh = cc::value_table(cc::compile(graphs::chsh_graph()));
  int defined = 0;
  for (const auto& row : chsh.cells)
    for (const auto& cell : row) defined += cell.has_value();
  CHECK(defined == 16);  // complete bipartite promise

  graphs::ExperimentalGraph single;
  single.parties = 2;
  single.vertex_counts = {1, 1};
  single.edges.push_back({{{0, 0}, {1, 0}}, -1});
  const auto table = cc::value_table(cc::compile(single));
  CHECK(table.cells.size() == 2);
  CHECK(table.cells[0].size() == 2);
  CHECK(table.cells[0][0] == -1);
  CHECK(table.cells[1][0] == 1);

  graphs::ExperimentalGraph triple;
  triple.parties = 3;
  triple.vertex_counts = {1, 1, 1};
  triple.edges.push_back({{{0, 0}, {1, 0}, {2, 0}}, +1});
  CHECK_THROWS_AS(cc::value_table(cc::compile(triple)), std::invalid_argument);
}

TEST_CASE("csv rendering is bit-exact") {
  const auto csv = cc::to_csv(cc::value_table(cc::compile(graphs::six_cycle_graph())));
  const std::string expected =
      ",(1,+1),(1,-1),(2,+1),(2,-1),(3,+1),(3,-1)\n"
      "(1,+1),1,-1,1,-1,-,-\n"
      "(1,-1),-1,1,-1,1,-,-\n"
      "(2,+1),-,-,1,-1,1,-1\n"
      "(2,-1),-,-,-1,1,-1,1\n"
      "(3,+1),1,-1,-,-,-1,1\n"
      "(3,-1),-1,1,-,-,1,-1\n";
  CHECK(csv == expected);
}

TEST_CASE("F flips sign with any single y") {
  rng::SplitMix64 gen(404);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(gen, 9);
    const auto problem = cc::compile(g);
    for (const auto& e : g.edges) {
      std::vector<cc::PartyInput> inputs;
      for (const auto& v : graphs::party_ordered(e))
        inputs.push_back({v.index, gen.next_unit() < 0.5 ? +1 : -1});
      const auto base = cc::evaluate_F(problem, inputs);
      REQUIRE(base.has_value());
      for (int k = 0; k < g.parties; ++k) {
        auto flipped = inputs;
        flipped[k].y = -flipped[k].y;
        CHECK(cc::evaluate_F(problem, flipped) == -*base);
      }
    }
  }
}
