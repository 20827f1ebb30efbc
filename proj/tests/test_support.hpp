#pragma once

// Random state generators shared by the unit and acceptance tests.

#include <cmath>
#include <random>

#include "pmwitness/core.hpp"

namespace pmw::testing {

inline Matrix ginibre(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_density(std::mt19937_64& rng, Eigen::Index n) {
  const Matrix g = ginibre(rng, n);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  const Matrix g = ginibre(rng, n);
  return 0.5 * (g + g.adjoint());
}

inline Vector random_ket(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline Matrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(rng, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

inline SpaceLayout two_qubits() { return SpaceLayout{{Role::Atom1, 2}, {Role::Atom2, 2}}; }

inline DensityMatrix random_two_qubit(std::mt19937_64& rng) {
  return DensityMatrix(two_qubits(), random_density(rng, 4));
}

inline DensityMatrix pure_two_qubit(const Vector& psi) {
  return DensityMatrix(two_qubits(), psi * psi.adjoint());
}

inline Vector bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace pmw::testing
