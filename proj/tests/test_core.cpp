#include <doctest.h>

#include <random>
#include <vector>

#include "pmwitness/core.hpp"
#include "test_support.hpp"

using namespace pmw;
using pmw::testing::max_abs;

namespace {

// Explicit (i, j, k, l) loop, independent of kron().
Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < b.rows(); ++k)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Trace out the middle factor of a d0 x d1 x d2 operator by index summation.
Matrix trace_middle_oracle(const Matrix& m, int d0, int d1, int d2) {
  Matrix out = Matrix::Zero(d0 * d2, d0 * d2);
  for (int i = 0; i < d0; ++i)
    for (int k = 0; k < d2; ++k)
      for (int ip = 0; ip < d0; ++ip)
        for (int kp = 0; kp < d2; ++kp)
          for (int j = 0; j < d1; ++j)
            out(i * d2 + k, ip * d2 + kp) += m((i * d1 + j) * d2 + k, (ip * d1 + j) * d2 + kp);
  return out;
}

const SpaceLayout kQubitA = SpaceLayout::qubit(Role::Atom1);
const SpaceLayout kQubitB = SpaceLayout::qubit(Role::Atom2);

}  // namespace

TEST_CASE("layout uses first-subsystem-most-significant indexing") {
  const SpaceLayout two = pmw::testing::two_qubits();
  CHECK(two.total_dim() == 4);
  const std::size_t d01[] = {0, 1};
  const std::size_t d10[] = {1, 0};
  CHECK(two.index(d01) == 1);
  CHECK(two.index(d10) == 2);

  const SpaceLayout mixed{{Role::Atom1, 2}, {Role::Atom2, 2}, {Role::PseudoMode, 3}};
  CHECK(mixed.total_dim() == 12);
  for (std::size_t i = 0; i < 12; ++i) CHECK(mixed.index(mixed.digits(i)) == i);
  CHECK(mixed.digits(5) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("layout rejects duplicate roles and degenerate dimensions") {
  CHECK_THROWS_AS(SpaceLayout({{Role::Atom1, 2}, {Role::Atom1, 2}}), DuplicateRole);
  CHECK_THROWS_AS(SpaceLayout({{Role::Atom1, 1}}), InvalidParameter);
  CHECK_THROWS_AS(kQubitA.position(Role::PseudoMode), UnknownRole);
}

TEST_CASE("tensor of kets and density matrices") {
  const Ket k = tensor(Ket::basis(kQubitA, {0}), Ket::basis(kQubitB, {1}));
  CHECK(k.amplitudes().size() == 4);
  CHECK(std::abs(k.amplitudes()(1) - Complex(1.0)) == 0.0);
  CHECK(k.amplitudes().cwiseAbs().sum() == doctest::Approx(1.0));

  const DensityMatrix mixed =
      tensor(DensityMatrix::maximally_mixed(kQubitA), DensityMatrix::maximally_mixed(kQubitB));
  CHECK(max_abs(mixed.data() - identity(4) / 4.0) == 0.0);

  CHECK_THROWS_AS(tensor(DensityMatrix::maximally_mixed(kQubitA), DensityMatrix::maximally_mixed(kQubitA)),
                  DuplicateRole);
}

TEST_CASE("kron matches the brute-force Kronecker loop") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = pmw::testing::ginibre(rng, 2);
    const Matrix b = pmw::testing::ginibre(rng, 2);
    CHECK(max_abs(kron(a, b) - kron_oracle(a, b)) == 0.0);
    const Matrix c = pmw::testing::ginibre(rng, 3);
    CHECK(max_abs(kron(a, c) - kron_oracle(a, c)) == 0.0);
  }
}

TEST_CASE("partial trace examples") {
  std::mt19937_64 rng(2);
  const DensityMatrix ra(kQubitA, pmw::testing::random_density(rng, 2));
  const DensityMatrix rb(kQubitB, pmw::testing::random_density(rng, 2));
  const DensityMatrix prod = tensor(ra, rb);
  CHECK(max_abs(partial_trace(prod, {Role::Atom1}).data() - ra.data()) <= 1e-12);
  CHECK(max_abs(partial_trace(prod, {Role::Atom2}).data() - rb.data()) <= 1e-12);

  const DensityMatrix bell = pmw::testing::pure_two_qubit(pmw::testing::bell_phi_plus());
  CHECK(max_abs(partial_trace(bell, {Role::Atom1}).data() - identity(2) / 2.0) <= 1e-15);

  // keeping everything is the identity map, exactly
  CHECK(max_abs(partial_trace(bell, {Role::Atom1, Role::Atom2}).data() - bell.data()) == 0.0);

  CHECK_THROWS_AS(partial_trace(bell, {Role::PseudoMode}), UnknownRole);
}

TEST_CASE("partial trace over the middle subsystem matches index contraction") {
  std::mt19937_64 rng(3);
  const SpaceLayout three{{Role::Atom1, 2}, {Role::Atom2, 2}, {Role::PseudoMode, 2}};
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix rho(three, pmw::testing::random_density(rng, 8));
    const DensityMatrix red = partial_trace(rho, {Role::Atom1, Role::PseudoMode});
    CHECK(max_abs(red.data() - trace_middle_oracle(rho.data(), 2, 2, 2)) <= 1e-15);
    CHECK(red.layout() == SpaceLayout({{Role::Atom1, 2}, {Role::PseudoMode, 2}}));
  }
  // uneven dimensions and keep-order independent of the argument order
  const SpaceLayout uneven{{Role::Atom1, 2}, {Role::PseudoMode, 3}, {Role::Atom2, 2}};
  const DensityMatrix rho(uneven, pmw::testing::random_density(rng, 12));
  const DensityMatrix red = partial_trace(rho, {Role::Atom2, Role::Atom1});
  CHECK(max_abs(red.data() - trace_middle_oracle(rho.data(), 2, 3, 2)) <= 1e-15);
}

TEST_CASE("partial trace properties on random states") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho = pmw::testing::random_two_qubit(rng);
    const Complex t = partial_trace(rho, {Role::Atom1}).data().trace();
    CHECK(std::abs(t - rho.data().trace()) <= 1e-12);

    const DensityMatrix ra(kQubitA, pmw::testing::random_density(rng, 2));
    const DensityMatrix rb(kQubitB, pmw::testing::random_density(rng, 2));
    CHECK(max_abs(partial_trace(tensor(ra, rb), {Role::Atom1}).data() - ra.data()) <= 1e-12);
  }
}

TEST_CASE("hermitian eigendecomposition") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  EigenSystem es = eig_hermitian(d);
  CHECK(es.values(0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(es.values(1) == doctest::Approx(0.75).epsilon(1e-15));

  Matrix sx(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  es = eig_hermitian(sx);
  CHECK(es.values(0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(es.values(1) == doctest::Approx(1.0).epsilon(1e-15));

  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(bad), NotHermitian);
}

TEST_CASE("hermitian eigendecomposition reconstructs random matrices") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix m = pmw::testing::random_hermitian(rng, 4);
    const EigenSystem es = eig_hermitian(m);
    const Matrix recon = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    CHECK(max_abs(recon - m) <= 1e-9);
    CHECK(max_abs(es.vectors.adjoint() * es.vectors - identity(4)) <= 1e-9);
    for (Eigen::Index i = 0; i < 4; ++i) {
      CHECK(max_abs(m * es.vectors.col(i) - es.values(i) * es.vectors.col(i)) <= 1e-9 * max_abs(m));
      if (i) CHECK(es.values(i - 1) <= es.values(i));
    }
  }
}

TEST_CASE("matrix algebra identities") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = pmw::testing::ginibre(rng, 4);
    const Matrix b = pmw::testing::ginibre(rng, 4);
    CHECK(max_abs(dag(mat_mul(a, b)) - mat_mul(dag(b), dag(a))) <= 1e-12);
    CHECK(max_abs(mat_mul(identity(4), a) - a) == 0.0);
    CHECK(max_abs(dag(dag(a)) - a) == 0.0);
    CHECK(max_abs(mat_add(a, scale(a, -1.0))) == 0.0);
  }
  CHECK_THROWS_AS(mat_mul(identity(2), identity(3)), LayoutMismatch);
}

TEST_CASE("density matrix validation") {
  Matrix m = identity(2);
  CHECK_THROWS_AS(DensityMatrix(kQubitA, m), InvalidState);  // trace 2
  m = identity(2) / 2.0;
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix(kQubitA, m), InvalidState);  // not Hermitian
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(kQubitA, neg), InvalidState);
  CHECK_THROWS_AS(DensityMatrix(kQubitA, identity(4) / 4.0), LayoutMismatch);

  Vector v = Vector::Zero(2);
  v(0) = 2.0;
  CHECK_THROWS_AS(Ket(kQubitA, v), InvalidState);
}
