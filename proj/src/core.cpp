#include "pmwitness/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pmw {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Atom1: return "atom1";
    case Role::Atom2: return "atom2";
    case Role::PseudoMode: return "pseudomode";
  }
  return "?";
}

Role role_from_string(std::string_view name) {
  if (name == "atom1") return Role::Atom1;
  if (name == "atom2") return Role::Atom2;
  if (name == "pseudomode") return Role::PseudoMode;
  throw UnknownRole("unknown role '" + std::string(name) + "'");
}

SpaceLayout::SpaceLayout(std::initializer_list<Subsystem> subsystems)
    : SpaceLayout(std::vector<Subsystem>(subsystems)) {}

SpaceLayout::SpaceLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].dim < 2) {
      throw InvalidParameter("subsystem " + std::string(to_string(subsystems_[i].role)) +
                             " has dimension < 2");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (subsystems_[j].role == subsystems_[i].role) {
        throw DuplicateRole("role " + std::string(to_string(subsystems_[i].role)) +
                            " listed twice");
      }
    }
  }
}

std::size_t SpaceLayout::total_dim() const {
  std::size_t d = 1;
  for (const auto& s : subsystems_) d *= s.dim;
  return d;
}

bool SpaceLayout::contains(Role role) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [role](const Subsystem& s) { return s.role == role; });
}

std::size_t SpaceLayout::position(Role role) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].role == role) return i;
  }
  throw UnknownRole("role " + std::string(to_string(role)) + " not in layout " + describe(*this));
}

std::size_t SpaceLayout::index(std::span<const std::size_t> digits) const {
  if (digits.size() != subsystems_.size()) {
    throw InvalidParameter("digit count does not match layout");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= subsystems_[i].dim) throw InvalidParameter("basis digit out of range");
    idx = idx * subsystems_[i].dim + digits[i];
  }
  return idx;
}

std::vector<std::size_t> SpaceLayout::digits(std::size_t index) const {
  std::vector<std::size_t> out(subsystems_.size());
  for (std::size_t i = subsystems_.size(); i-- > 0;) {
    out[i] = index % subsystems_[i].dim;
    index /= subsystems_[i].dim;
  }
  return out;
}

SpaceLayout SpaceLayout::concat(const SpaceLayout& other) const {
  std::vector<Subsystem> all = subsystems_;
  all.insert(all.end(), other.subsystems_.begin(), other.subsystems_.end());
  return SpaceLayout(std::move(all));
}

std::string describe(const SpaceLayout& layout) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i) os << ", ";
    os << to_string(layout.subsystems()[i].role) << ':' << layout.subsystems()[i].dim;
  }
  os << ']';
  return os.str();
}

Ket::Ket(SpaceLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw LayoutMismatch("ket length does not match layout " + describe(layout_));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kKetNorm) {
    throw InvalidState("ket is not normalized");
  }
}

Ket Ket::basis(SpaceLayout layout, std::initializer_list<std::size_t> digits) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  const std::vector<std::size_t> d(digits);
  v(static_cast<Eigen::Index>(layout.index(d))) = 1.0;
  return Ket(std::move(layout), std::move(v));
}

StateDefects state_defects(const Matrix& rho) {
  StateDefects d{};
  d.hermiticity = hermiticity_defect(rho);
  d.trace_drift = std::abs(rho.trace() - Complex(1.0));
  const Matrix h = 0.5 * (rho + rho.adjoint());
  d.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
  return d;
}

DensityMatrix::DensityMatrix(SpaceLayout layout, Matrix data)
    : DensityMatrix(std::move(layout), std::move(data), Unchecked{}) {
  const StateDefects d = state_defects(data_);
  if (d.hermiticity > tol::kHermitian) throw InvalidState("density matrix is not Hermitian");
  if (d.trace_drift > tol::kTrace) throw InvalidState("density matrix trace differs from 1");
  if (d.min_eigenvalue < tol::kPositivity) {
    throw InvalidState("density matrix has a negative eigenvalue");
  }
}

DensityMatrix::DensityMatrix(SpaceLayout layout, Matrix data, Unchecked)
    : layout_(std::move(layout)), data_(std::move(data)) {
  const auto n = static_cast<Eigen::Index>(layout_.total_dim());
  if (data_.rows() != n || data_.cols() != n) {
    throw LayoutMismatch("matrix shape does not match layout " + describe(layout_));
  }
}

DensityMatrix DensityMatrix::from_ket(const Ket& ket) {
  return DensityMatrix(ket.layout(), ket.amplitudes() * ket.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(SpaceLayout layout) {
  const auto n = layout.total_dim();
  return DensityMatrix(std::move(layout), identity(n) / static_cast<double>(n));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  return Ket(a.layout().concat(b.layout()), kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.layout().concat(b.layout()), kron(a.data(), b.data()),
                       DensityMatrix::Unchecked{});
}

Matrix partial_trace(const Matrix& m, const SpaceLayout& layout, std::span<const Role> keep,
                     SpaceLayout* kept_layout) {
  const auto n = layout.total_dim();
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    throw LayoutMismatch("matrix shape does not match layout " + describe(layout));
  }
  if (keep.empty()) throw InvalidParameter("partial trace must keep at least one subsystem");

  std::vector<bool> kept(layout.size(), false);
  for (Role r : keep) kept[layout.position(r)] = true;

  std::vector<Subsystem> kept_subs;
  std::vector<std::size_t> kept_pos;
  std::vector<std::size_t> traced_pos;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (kept[i]) {
      kept_subs.push_back(layout.subsystems()[i]);
      kept_pos.push_back(i);
    } else {
      traced_pos.push_back(i);
    }
  }
  SpaceLayout out_layout(kept_subs);
  const std::size_t nk = out_layout.total_dim();

  // Strides of each subsystem in the full index.
  std::vector<std::size_t> stride(layout.size());
  std::size_t s = 1;
  for (std::size_t i = layout.size(); i-- > 0;) {
    stride[i] = s;
    s *= layout.subsystems()[i].dim;
  }
  auto offset_of = [&](std::size_t local, const std::vector<std::size_t>& positions) {
    std::size_t off = 0;
    for (std::size_t p = positions.size(); p-- > 0;) {
      const std::size_t d = layout.subsystems()[positions[p]].dim;
      off += (local % d) * stride[positions[p]];
      local /= d;
    }
    return off;
  };

  std::size_t nt = 1;
  for (std::size_t p : traced_pos) nt *= layout.subsystems()[p].dim;

  std::vector<std::size_t> kept_off(nk);
  for (std::size_t k = 0; k < nk; ++k) kept_off[k] = offset_of(k, kept_pos);
  std::vector<std::size_t> traced_off(nt);
  for (std::size_t t = 0; t < nt; ++t) traced_off[t] = offset_of(t, traced_pos);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk));
  for (std::size_t r = 0; r < nk; ++r) {
    for (std::size_t c = 0; c < nk; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < nt; ++t) {
        acc += m(static_cast<Eigen::Index>(kept_off[r] + traced_off[t]),
                 static_cast<Eigen::Index>(kept_off[c] + traced_off[t]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  if (kept_layout) *kept_layout = std::move(out_layout);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Role> keep) {
  SpaceLayout kept;
  Matrix m = partial_trace(rho.data(), rho.layout(), keep, &kept);
  return DensityMatrix(std::move(kept), std::move(m), DensityMatrix::Unchecked{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Role> keep) {
  const std::vector<Role> k(keep);
  return partial_trace(rho, std::span<const Role>(k));
}

Matrix embed(const Matrix& local, const SpaceLayout& layout, Role role) {
  const std::size_t pos = layout.position(role);
  if (static_cast<std::size_t>(local.rows()) != layout.subsystems()[pos].dim) {
    throw LayoutMismatch("local operator dimension does not match subsystem");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(layout.subsystems()[i].dim);
    out = kron(out, i == pos ? local : Matrix::Identity(d, d));
  }
  return out;
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem eig_hermitian(const Matrix& m) {
  if (hermiticity_defect(m) > tol::kHermitian) throw NotHermitian("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvals_hermitian(const Matrix& m) {
  if (hermiticity_defect(m) > tol::kHermitian) throw NotHermitian("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix dag(const Matrix& m) { return m.adjoint(); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw LayoutMismatch("inner dimensions differ");
  return a * b;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw LayoutMismatch("shapes differ");
  return a + b;
}

Matrix scale(const Matrix& m, Complex factor) { return factor * m; }

Matrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Matrix::Identity(n, n);
}

}  // namespace pmw
