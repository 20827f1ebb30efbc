#include "pmwitness/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pmw {

void ModelParams::validate() const {
  if (n_atoms != 1 && n_atoms != 2) throw InvalidParameter("n_atoms must be 1 or 2");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidParameter("omega must be > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidParameter("gamma must be >= 0");
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw InvalidParameter("omega0 must be >= 0");
  if (fock_cutoff < 1) throw InvalidParameter("fock_cutoff must be >= 1");
}

SpaceLayout model_layout(const ModelParams& p) {
  p.validate();
  const auto mode_dim = static_cast<std::size_t>(p.fock_cutoff) + 1;
  if (p.n_atoms == 1) return SpaceLayout{{Role::Atom1, 2}, {Role::PseudoMode, mode_dim}};
  return SpaceLayout{{Role::Atom1, 2}, {Role::Atom2, 2}, {Role::PseudoMode, mode_dim}};
}

Matrix qubit_lowering() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

Matrix annihilation(int cutoff) {
  const Eigen::Index n = cutoff + 1;
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

OperatorSet build_operators(const ModelParams& p) {
  OperatorSet ops;
  ops.layout = model_layout(p);
  ops.a = embed(annihilation(p.fock_cutoff), ops.layout, Role::PseudoMode);
  ops.a_dag = ops.a.adjoint();
  ops.a_dag_a = ops.a_dag * ops.a;

  const Role atoms[] = {Role::Atom1, Role::Atom2};
  Matrix collective_plus = Matrix::Zero(ops.a.rows(), ops.a.cols());
  ops.number = ops.a_dag_a;
  for (int j = 0; j < p.n_atoms; ++j) {
    Matrix sm = embed(qubit_lowering(), ops.layout, atoms[j]);
    Matrix sp = sm.adjoint();
    collective_plus += sp;
    ops.number += sp * sm;
    ops.sigma_minus.push_back(std::move(sm));
    ops.sigma_plus.push_back(std::move(sp));
  }
  const Matrix coupling = p.omega * collective_plus * ops.a;
  ops.V = coupling + coupling.adjoint();
  return ops;
}

void liouvillian_rhs(const OperatorSet& ops, double gamma, const Matrix& rho, Matrix& out) {
  static const Complex kI(0.0, 1.0);
  const Matrix v_rho = ops.V * rho;
  out.noalias() = -kI * (v_rho - rho * ops.V);
  if (gamma != 0.0) {
    const Matrix nrho = ops.a_dag_a * rho;
    out.noalias() += gamma * (ops.a * rho * ops.a_dag);
    out.noalias() -= (0.5 * gamma) * (nrho + rho * ops.a_dag_a);
  }
}

Matrix liouvillian_rhs(const OperatorSet& ops, double gamma, const Matrix& rho) {
  Matrix out(rho.rows(), rho.cols());
  liouvillian_rhs(ops, gamma, rho, out);
  return out;
}

Matrix liouvillian_apply(const OperatorSet& ops, double gamma, const DensityMatrix& rho) {
  if (!(rho.layout() == ops.layout)) {
    throw LayoutMismatch("state layout " + describe(rho.layout()) + " differs from operator layout " +
                         describe(ops.layout));
  }
  return liouvillian_rhs(ops, gamma, rho.data());
}

double spectral_density(const ModelParams& p, double w) {
  const double detuning = w - p.omega0;
  const double denom = detuning * detuning + 0.25 * p.gamma * p.gamma;
  if (denom == 0.0) {
    throw SingularSpectralDensity("spectral density is singular at w = omega0 when gamma = 0");
  }
  return p.omega * p.omega / std::numbers::pi * p.gamma / denom;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Strong: return "strong";
    case Regime::Weak: return "weak";
    case Regime::Boundary: return "boundary";
  }
  return "?";
}

Regime regime(const ModelParams& p) {
  p.validate();
  const double threshold = 2.0 * p.omega;
  if (std::abs(p.gamma - threshold) <= 1e-12 * threshold) return Regime::Boundary;
  return p.gamma < threshold ? Regime::Strong : Regime::Weak;
}

}  // namespace pmw
