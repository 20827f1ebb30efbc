#include "pmwitness/states.hpp"

#include <cmath>
#include <string>

namespace pmw {

char to_letter(PreparationKind kind) {
  switch (kind) {
    case PreparationKind::Uncorrelated: return 'a';
    case PreparationKind::Classical: return 'b';
    case PreparationKind::QuantumDiscordant: return 'c';
    case PreparationKind::Entangled: return 'd';
  }
  return '?';
}

PreparationKind preparation_from_letter(std::string_view letter) {
  if (letter == "a") return PreparationKind::Uncorrelated;
  if (letter == "b") return PreparationKind::Classical;
  if (letter == "c") return PreparationKind::QuantumDiscordant;
  if (letter == "d") return PreparationKind::Entangled;
  throw InvalidParameter("unknown preparation '" + std::string(letter) + "', expected a, b, c or d");
}

void Preparation::validate() const {
  if (!(alpha2 > 0.0 && alpha2 < 1.0)) {
    throw InvalidParameter("alpha2 must lie strictly between 0 and 1");
  }
}

const char* to_string(CorrelationClass c) {
  switch (c) {
    case CorrelationClass::None: return "none";
    case CorrelationClass::ClassicalOnly: return "classical-only";
    case CorrelationClass::DiscordNoEntanglement: return "discord-no-entanglement";
    case CorrelationClass::Entangled: return "entangled";
  }
  return "?";
}

DensityMatrix system_marginal(const Preparation& prep) {
  prep.validate();
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = prep.alpha2;
  m(1, 1) = 1.0 - prep.alpha2;
  return DensityMatrix(SpaceLayout::qubit(Role::Atom1), std::move(m));
}

namespace {

Vector fock(std::size_t mode_dim, std::size_t n) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(mode_dim));
  v(static_cast<Eigen::Index>(n)) = 1.0;
  return v;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

// Qubit (x) mode state in the single-atom ordering [qubit, mode].
Matrix qubit_mode_state(const Preparation& prep, std::size_t mode_dim) {
  const double w_g = prep.alpha2;
  const double w_e = 1.0 - prep.alpha2;
  const Vector g = fock(2, 0);
  const Vector e = fock(2, 1);
  const Vector n0 = fock(mode_dim, 0);
  const Vector n1 = fock(mode_dim, 1);

  switch (prep.kind) {
    case PreparationKind::Uncorrelated:
      return kron(Matrix(w_g * projector(g) + w_e * projector(e)), projector(n0));
    case PreparationKind::Classical:
      return w_g * kron(projector(g), projector(n1)) + w_e * kron(projector(e), projector(n0));
    case PreparationKind::QuantumDiscordant: {
      const Vector phi = (n0 + n1) / std::sqrt(2.0);
      return w_g * kron(projector(g), projector(phi)) + w_e * kron(projector(e), projector(n0));
    }
    case PreparationKind::Entangled: {
      const Vector psi = std::sqrt(w_g) * kron(g, n1) + std::sqrt(w_e) * kron(e, n0);
      return projector(psi);
    }
  }
  throw InvalidParameter("unknown preparation kind");
}

}  // namespace

DensityMatrix initial_state(const Preparation& prep, const ModelParams& p) {
  prep.validate();
  if (p.fock_cutoff < 1) throw CutoffTooSmall("initial states need pseudo-mode levels 0 and 1");
  const SpaceLayout layout = model_layout(p);
  const auto mode_dim = layout.dim(Role::PseudoMode);

  Matrix rho = qubit_mode_state(prep, mode_dim);
  if (p.n_atoms == 2) {
    // probe |g><g| is the most significant factor
    rho = kron(projector(fock(2, 0)), rho);
  }
  return DensityMatrix(layout, std::move(rho));
}

CorrelationClass state_correlation_class(const Preparation& prep) {
  switch (prep.kind) {
    case PreparationKind::Uncorrelated: return CorrelationClass::None;
    case PreparationKind::Classical: return CorrelationClass::ClassicalOnly;
    case PreparationKind::QuantumDiscordant: return CorrelationClass::DiscordNoEntanglement;
    case PreparationKind::Entangled: return CorrelationClass::Entangled;
  }
  return CorrelationClass::None;
}

}  // namespace pmw
