#pragma once

// Damped Jaynes-Cummings model with the Lorentzian reservoir replaced by a
// single damped pseudo-mode. Everything lives in the interaction picture, so
// the Bohr frequency omega0 never enters the dynamics; it is kept only for the
// spectral density.

#include <vector>

#include "pmwitness/core.hpp"

namespace pmw {

struct ModelParams {
  int n_atoms = 1;
  double omega = 1.0;   // atom/pseudo-mode coupling, sets the time unit
  double gamma = 1.0;   // pseudo-mode decay rate
  double omega0 = 0.0;  // Bohr frequency
  int fock_cutoff = 1;  // highest retained pseudo-mode Fock level

  /// Throws InvalidParameter when an invariant is violated.
  void validate() const;
};

/// Ladder and interaction operators embedded in the full space
/// [atom1, (atom2), pseudomode]. Immutable once built.
struct OperatorSet {
  SpaceLayout layout;
  Matrix V;
  Matrix a;
  Matrix a_dag;
  std::vector<Matrix> sigma_minus;
  std::vector<Matrix> sigma_plus;
  Matrix number;  // total excitation number, sum_j sigma_+^j sigma_-^j + a^dagger a
  // Cached products for the dissipator.
  Matrix a_dag_a;
};

SpaceLayout model_layout(const ModelParams& p);

/// Qubit lowering operator |g><e| with |g> = index 0, |e> = index 1.
Matrix qubit_lowering();
/// Truncated annihilation operator on Fock levels 0..cutoff.
Matrix annihilation(int cutoff);

OperatorSet build_operators(const ModelParams& p);

/// Right-hand side of the pseudo-mode master equation,
/// -i[V, rho] + gamma/2 (2 a rho a^dagger - a^dagger a rho - rho a^dagger a).
Matrix liouvillian_rhs(const OperatorSet& ops, double gamma, const Matrix& rho);
/// Same as liouvillian_rhs, writing into `out` without allocating.
void liouvillian_rhs(const OperatorSet& ops, double gamma, const Matrix& rho, Matrix& out);

/// Checked variant; throws LayoutMismatch if rho is not over ops.layout.
Matrix liouvillian_apply(const OperatorSet& ops, double gamma, const DensityMatrix& rho);

/// Lorentzian J(w) = (Omega^2/pi) Gamma / ((w - omega0)^2 + Gamma^2/4).
double spectral_density(const ModelParams& p, double w);

enum class Regime { Strong, Weak, Boundary };

const char* to_string(Regime r);

/// Strong iff gamma < 2 omega, weak iff gamma > 2 omega, boundary when equal
/// within 1e-12 relative.
Regime regime(const ModelParams& p);

}  // namespace pmw
