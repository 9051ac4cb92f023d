// Spectral checks used by the validation suite: density-matrix eigenvalues
// (for the positive-semidefiniteness invariant) and the entanglement entropy
// of a pure two-qubit state (von Neumann entropy of one reduced qubit,
// natural log).
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "qgt/two_qubit.hpp"

namespace qgt {

namespace detail {
inline Eigen::Matrix4cd to_eigen(const Mat4& m) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m[r][c];
  return out;
}
}  // namespace detail

// Eigenvalues of a Hermitian 4x4 matrix, ascending.
inline std::array<double, 4> density_eigenvalues(const Mat4& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(detail::to_eigen(rho));
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

inline double density_min_eigenvalue(const Mat4& rho) { return density_eigenvalues(rho)[0]; }

// Von Neumann entropy (natural log) of the first qubit's reduced state for a
// pure two-qubit state: ln 2 for a maximally entangled state, 0 for a
// product state.
inline double single_qubit_entropy(const Vec4& psi) {
  Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b)
        reduced(a, a2) += psi[2 * a + b] * std::conj(psi[2 * a2 + b]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(reduced);
  double entropy = 0;
  for (int i = 0; i < 2; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > 0) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

}  // namespace qgt
