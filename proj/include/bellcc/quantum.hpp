#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "bellcc/graphs.hpp"

namespace bellcc::quantum {

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenvalueTol = 1e-9;
inline constexpr double kBlochTol = 1e-9;

/// Pure state on a tensor product of small local spaces.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  std::vector<int> dims;

  int dimension() const { return static_cast<int>(amplitudes.size()); }
  int parties() const { return static_cast<int>(dims.size()); }
};

/// Validating constructor: unit norm, dims consistent with the length.
StateVector make_state(Eigen::VectorXcd amplitudes, std::vector<int> dims);

/// The two-qubit singlet (|01> - |10>)/sqrt(2).
StateVector singlet();

/// A +1/-1-valued Hermitian observable; the Bloch vector is kept when the
/// observable was built from one.
struct Observable {
  Eigen::MatrixXcd matrix;
  std::optional<Eigen::Vector3d> bloch;

  int dimension() const { return static_cast<int>(matrix.rows()); }
};

/// v . (sigma_x, sigma_y, sigma_z) for a unit vector v.
Observable observable_from_bloch(const Eigen::Vector3d& v);

/// Validating constructor: Hermitian with all eigenvalues in {+1, -1}.
Observable observable_from_matrix(Eigen::MatrixXcd m);

/// Raw tensor-product expectation <psi| O_1 x ... x O_n |psi>.
/// No +-1 eigenvalue requirement; used by correlator() and by linearity
/// checks.
std::complex<double> expectation(const StateVector& state,
                                 const std::vector<Eigen::MatrixXcd>& ops);

/// <psi| O_1 x ... x O_n |psi> for one observable per party. Real for
/// Hermitian inputs; the imaginary part is discarded after a sanity bound.
double correlator(const StateVector& state, const std::vector<Observable>& per_party);

/// Applies a local operator to one tensor factor of the state.
Eigen::VectorXcd apply_local(const StateVector& state, const Eigen::MatrixXcd& op,
                             int party);

struct QuantumStrategy {
  StateVector state;
  std::map<graphs::VertexId, Observable> observables;
};

/// Singlet strategy for cycle_graph(m): Alice's directions lie at angles
/// (2i-1)*pi/2m in the x-z plane and Bob's at j*pi/m + pi (the antipode, so
/// that the positive edges of cycle_graph(m) carry correlator +cos(pi/2m)
/// and the negative closing edge carries -cos(pi/2m)).
QuantumStrategy cycle_strategy(int m);

}  // namespace bellcc::quantum
