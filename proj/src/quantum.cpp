#include "bellcc/quantum.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bellcc::quantum {

namespace {

void check_dims(const std::vector<int>& dims, Eigen::Index length) {
  if (dims.empty()) throw std::invalid_argument("state needs at least one party");
  long long product = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("local dimensions must be positive");
    product *= d;
  }
  if (product != static_cast<long long>(length))
    throw std::invalid_argument("product of local dimensions does not match amplitude length");
}

}  // namespace

StateVector make_state(Eigen::VectorXcd amplitudes, std::vector<int> dims) {
  check_dims(dims, amplitudes.size());
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "state vector norm " << norm << " is not 1 within " << kNormTol;
    throw std::invalid_argument(os.str());
  }
  return {std::move(amplitudes), std::move(dims)};
}

StateVector singlet() {
  Eigen::VectorXcd amps(4);
  const double s = 1.0 / std::numbers::sqrt2;
  amps << 0.0, s, -s, 0.0;
  return {std::move(amps), {2, 2}};
}

Observable observable_from_bloch(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kBlochTol)
    throw std::invalid_argument("Bloch vector must be a unit vector");
  const Eigen::Vector3d u = v / norm;
  Eigen::MatrixXcd m(2, 2);
  const std::complex<double> i(0.0, 1.0);
  m << u.z(), u.x() - i * u.y(),  //
      u.x() + i * u.y(), -u.z();
  Observable obs;
  obs.matrix = std::move(m);
  obs.bloch = u;
  return obs;
}

Observable observable_from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("observable matrix must be square");
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol)
    throw std::invalid_argument("observable matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()[k];
    if (std::min(std::abs(lambda - 1.0), std::abs(lambda + 1.0)) > kEigenvalueTol)
      throw std::invalid_argument("observable eigenvalues must be +1 or -1");
  }
  Observable obs;
  obs.matrix = std::move(m);
  return obs;
}

Eigen::VectorXcd apply_local(const StateVector& state, const Eigen::MatrixXcd& op,
                             int party) {
  const int n = state.parties();
  if (party < 0 || party >= n) throw std::out_of_range("party index out of range");
  const int d = state.dims[party];
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("operator dimension does not match the local space");

  Eigen::Index stride = 1;
  for (int k = party + 1; k < n; ++k) stride *= state.dims[k];
  const Eigen::Index block = stride * d;

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amplitudes.size());
  for (Eigen::Index base = 0; base < state.amplitudes.size(); base += block) {
    for (Eigen::Index rest = 0; rest < stride; ++rest) {
      for (int a = 0; a < d; ++a) {
        std::complex<double> acc = 0.0;
        for (int b = 0; b < d; ++b)
          acc += op(a, b) * state.amplitudes[base + b * stride + rest];
        out[base + a * stride + rest] = acc;
      }
    }
  }
  return out;
}

std::complex<double> expectation(const StateVector& state,
                                 const std::vector<Eigen::MatrixXcd>& ops) {
  if (static_cast<int>(ops.size()) != state.parties())
    throw std::invalid_argument("need exactly one operator per party");
  StateVector cursor = state;
  for (int k = 0; k < state.parties(); ++k)
    cursor.amplitudes = apply_local(cursor, ops[k], k);
  return state.amplitudes.dot(cursor.amplitudes);
}

double correlator(const StateVector& state, const std::vector<Observable>& per_party) {
  std::vector<Eigen::MatrixXcd> ops;
  ops.reserve(per_party.size());
  for (std::size_t k = 0; k < per_party.size(); ++k) {
    if (k < state.dims.size() && per_party[k].dimension() != state.dims[k])
      throw std::invalid_argument("observable dimension does not match the local space");
    ops.push_back(per_party[k].matrix);
  }
  const std::complex<double> value = expectation(state, ops);
  assert(std::abs(value.imag()) < 1e-10);
  return value.real();
}

QuantumStrategy cycle_strategy(int m) {
  if (m < 2) throw std::invalid_argument("cycle_strategy requires m >= 2");
  QuantumStrategy strat;
  strat.state = singlet();
  for (int i = 1; i <= m; ++i) {
    const double a = (2 * i - 1) * std::numbers::pi / (2 * m);
    strat.observables.emplace(graphs::VertexId{0, i - 1},
                              observable_from_bloch({std::cos(a), 0.0, std::sin(a)}));
  }
  for (int j = 1; j <= m; ++j) {
    const double b = j * std::numbers::pi / m;
    strat.observables.emplace(graphs::VertexId{1, j - 1},
                              observable_from_bloch({-std::cos(b), 0.0, -std::sin(b)}));
  }
  return strat;
}

}  // namespace bellcc::quantum
