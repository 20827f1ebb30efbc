#pragma once

// Dense linear algebra on small labeled tensor-product Hilbert spaces.
//
// Basis convention: the first subsystem listed in a SpaceLayout is the most
// significant digit of the mixed-radix basis index. Two qubits are therefore
// ordered |00>, |01>, |10>, |11>. The partial trace and the sigma_y (x) sigma_y
// flip used by the concurrence both depend on this.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pmwitness/errors.hpp"

namespace pmw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Role { Atom1, Atom2, PseudoMode };

std::string_view to_string(Role role);
Role role_from_string(std::string_view name);

struct Subsystem {
  Role role;
  std::size_t dim;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

class SpaceLayout {
 public:
  SpaceLayout() = default;
  SpaceLayout(std::initializer_list<Subsystem> subsystems);
  explicit SpaceLayout(std::vector<Subsystem> subsystems);

  static SpaceLayout qubit(Role role) { return SpaceLayout{{role, 2}}; }

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  std::size_t total_dim() const;

  bool contains(Role role) const;
  /// Position of `role` in the subsystem list; throws UnknownRole.
  std::size_t position(Role role) const;
  std::size_t dim(Role role) const { return subsystems_[position(role)].dim; }

  /// Mixed-radix index of a product basis state, digits in layout order.
  std::size_t index(std::span<const std::size_t> digits) const;
  std::vector<std::size_t> digits(std::size_t index) const;

  /// Concatenation; throws DuplicateRole if the role sets overlap.
  SpaceLayout concat(const SpaceLayout& other) const;

  friend bool operator==(const SpaceLayout&, const SpaceLayout&) = default;

 private:
  std::vector<Subsystem> subsystems_;
};

std::string describe(const SpaceLayout& layout);

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPositivity = -1e-8;
inline constexpr double kKetNorm = 1e-12;
}  // namespace tol

class Ket {
 public:
  /// Validates unit norm within tol::kKetNorm.
  Ket(SpaceLayout layout, Vector amplitudes);

  /// Computational basis ket with one digit per subsystem.
  static Ket basis(SpaceLayout layout, std::initializer_list<std::size_t> digits);

  const SpaceLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  SpaceLayout layout_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  struct Unchecked {};

  /// Validates hermiticity, unit trace and positivity (see tol).
  DensityMatrix(SpaceLayout layout, Matrix data);
  /// Skips the invariant checks; used for integrator output where drift is
  /// tracked separately as a diagnostic.
  DensityMatrix(SpaceLayout layout, Matrix data, Unchecked);

  static DensityMatrix from_ket(const Ket& ket);
  static DensityMatrix maximally_mixed(SpaceLayout layout);

  const SpaceLayout& layout() const { return layout_; }
  const Matrix& data() const { return data_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }

 private:
  SpaceLayout layout_;
  Matrix data_;
};

struct StateDefects {
  double hermiticity;  // max |rho - rho^dagger|
  double trace_drift;  // |Tr rho - 1|
  double min_eigenvalue;
};

StateDefects state_defects(const Matrix& rho);

Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Kronecker product with `a` as the most significant factor.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Reduced matrix over the kept roles, in their original relative order.
/// Works on any square operator; the trace is preserved.
Matrix partial_trace(const Matrix& m, const SpaceLayout& layout, std::span<const Role> keep,
                     SpaceLayout* kept_layout = nullptr);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Role> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Role> keep);

/// Embeds a single-subsystem operator at `role`, identity elsewhere.
Matrix embed(const Matrix& local, const SpaceLayout& layout, Role role);

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns
};

double hermiticity_defect(const Matrix& m);

/// Throws NotHermitian when max |m - m^dagger| exceeds tol::kHermitian.
EigenSystem eig_hermitian(const Matrix& m);
RealVector eigvals_hermitian(const Matrix& m);

Matrix dag(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, Complex factor);
Matrix identity(std::size_t dim);

}  // namespace pmw
