#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellcc/quantum.hpp"
#include "bellcc/rng.hpp"

using namespace bellcc;
using std::numbers::pi;

namespace {

quantum::StateVector random_two_qubit_state(rng::SplitMix64& gen) {
  Eigen::VectorXcd amps(4);
  for (int i = 0; i < 4; ++i)
    amps[i] = std::complex<double>(gen.next_unit() - 0.5, gen.next_unit() - 0.5);
  amps.normalize();
  return quantum::make_state(amps, {2, 2});
}

Eigen::Vector3d random_direction(rng::SplitMix64& gen) {
  Eigen::Vector3d v;
  do {
    v = {gen.next_unit() - 0.5, gen.next_unit() - 0.5, gen.next_unit() - 0.5};
  } while (v.norm() < 1e-3);
  return v.normalized();
}

}  // namespace

TEST_CASE("singlet amplitudes, norm and |00> overlap") {
  const auto psi = quantum::singlet();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(psi.amplitudes[0] == std::complex<double>(0.0));
  CHECK(psi.amplitudes[1].real() == doctest::Approx(s).epsilon(1e-15));
  CHECK(psi.amplitudes[2].real() == doctest::Approx(-s).epsilon(1e-15));
  CHECK(psi.amplitudes[3] == std::complex<double>(0.0));
  CHECK(psi.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(psi.amplitudes[0]) == 0.0);  // <00|psi>
}

TEST_CASE("state constructor rejects bad input") {
  Eigen::VectorXcd amps(4);
  amps << 1.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(quantum::make_state(amps, {2, 2}), std::invalid_argument);
  amps << 1.0, 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(quantum::make_state(amps, {2, 3}), std::invalid_argument);
}

TEST_CASE("bloch observables: Z, X and the diagonal direction") {
  const auto z = quantum::observable_from_bloch({0, 0, 1});
  CHECK(z.matrix(0, 0) == std::complex<double>(1.0));
  CHECK(z.matrix(1, 1) == std::complex<double>(-1.0));
  CHECK(z.matrix(0, 1) == std::complex<double>(0.0));

  const auto x = quantum::observable_from_bloch({1, 0, 0});
  CHECK(x.matrix(0, 1) == std::complex<double>(1.0));
  CHECK(x.matrix(1, 0) == std::complex<double>(1.0));
  CHECK(x.matrix(0, 0) == std::complex<double>(0.0));

  // (X + Z)/sqrt(2), assembled directly as the expected matrix
  const auto diag = quantum::observable_from_bloch({std::cos(pi / 4), 0, std::sin(pi / 4)});
  Eigen::MatrixXcd expected(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  expected << s, s, s, -s;
  CHECK((diag.matrix - expected).cwiseAbs().maxCoeff() < 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diag.matrix);
  CHECK(solver.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(solver.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("non-unit bloch vectors and non-involutory matrices are rejected") {
  CHECK_THROWS_AS(quantum::observable_from_bloch({0, 0, 0.5}), std::invalid_argument);
  Eigen::MatrixXcd m(2, 2);
  m << 2.0, 0.0, 0.0, -1.0;  // eigenvalue 2
  CHECK_THROWS_AS(quantum::observable_from_matrix(m), std::invalid_argument);
  m << 0.0, 1.0, 0.0, 0.0;  // not Hermitian
  CHECK_THROWS_AS(quantum::observable_from_matrix(m), std::invalid_argument);
}

TEST_CASE("singlet correlators: ZZ = -1, ZX = 0") {
  const auto psi = quantum::singlet();
  const auto z = quantum::observable_from_bloch({0, 0, 1});
  const auto x = quantum::observable_from_bloch({1, 0, 0});
  CHECK(quantum::correlator(psi, {z, z}) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(quantum::correlator(psi, {z, x}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dimension mismatches are rejected") {
  const auto psi = quantum::singlet();
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(3, 3);
  big(2, 2) = -1.0;
  const auto obs3 = quantum::observable_from_matrix(big);
  const auto z = quantum::observable_from_bloch({0, 0, 1});
  CHECK_THROWS_AS(quantum::correlator(psi, {obs3, z}), std::invalid_argument);
}

TEST_CASE("singlet correlator equals -a.b over a 12x12 direction grid") {
  const auto psi = quantum::singlet();
  for (int i = 0; i < 12; ++i) {
    const double a = 2 * pi * i / 12;
    const Eigen::Vector3d va{std::cos(a), 0, std::sin(a)};
    for (int j = 0; j < 12; ++j) {
      const double b = 2 * pi * j / 12;
      const Eigen::Vector3d vb{std::cos(b), 0, std::sin(b)};
      const double e = quantum::correlator(psi, {quantum::observable_from_bloch(va),
                                                 quantum::observable_from_bloch(vb)});
      CHECK(std::abs(e - (-va.dot(vb))) < 1e-10);
    }
  }
}

TEST_CASE("correlator magnitudes stay within 1 for random strategies") {
  rng::SplitMix64 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = random_two_qubit_state(gen);
    const auto a = quantum::observable_from_bloch(random_direction(gen));
    const auto b = quantum::observable_from_bloch(random_direction(gen));
    CHECK(std::abs(quantum::correlator(psi, {a, b})) <= 1.0 + 1e-10);
  }
}

TEST_CASE("expectation is linear in each operator slot") {
  rng::SplitMix64 gen(5);
  const auto psi = random_two_qubit_state(gen);
  const Eigen::MatrixXcd a = quantum::observable_from_bloch(random_direction(gen)).matrix;
  const Eigen::MatrixXcd a2 = quantum::observable_from_bloch(random_direction(gen)).matrix;
  const Eigen::MatrixXcd b = quantum::observable_from_bloch(random_direction(gen)).matrix;
  const auto lhs = quantum::expectation(psi, {2.0 * a - 0.5 * a2, b});
  const auto rhs = 2.0 * quantum::expectation(psi, {a, b}) -
                   0.5 * quantum::expectation(psi, {a2, b});
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("cycle strategy rejects m < 2 and covers both parties") {
  CHECK_THROWS_AS(quantum::cycle_strategy(1), std::invalid_argument);
  const auto strat = quantum::cycle_strategy(3);
  CHECK(strat.observables.size() == 6);
  for (const auto& [vid, obs] : strat.observables) {
    REQUIRE(obs.bloch.has_value());
    CHECK(obs.bloch->norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(obs.bloch->y() == 0.0);  // planar
  }
}

TEST_CASE("cycle strategy edge correlators have the fixed sign convention") {
  // E(A_1, B_1) = +cos(pi/4) for m = 2: Bob's antipodal direction makes the
  // non-closing edges positive.
  const auto strat = quantum::cycle_strategy(2);
  const double e = quantum::correlator(
      strat.state, {strat.observables.at({0, 0}), strat.observables.at({1, 0})});
  CHECK(e == doctest::Approx(std::cos(pi / 4)).epsilon(1e-12));
}
