#include <doctest.h>

#include "pmwitness/measures.hpp"
#include "pmwitness/states.hpp"
#include "test_support.hpp"

using namespace pmw;
using pmw::testing::max_abs;

namespace {

ModelParams model(int n_atoms = 1, int cutoff = 1) {
  ModelParams p;
  p.n_atoms = n_atoms;
  p.fock_cutoff = cutoff;
  return p;
}

double excitation(const DensityMatrix& rho, const ModelParams& p) {
  return (build_operators(p).number * rho.data()).trace().real();
}

}  // namespace

TEST_CASE("system marginal") {
  const DensityMatrix half = system_marginal({PreparationKind::Classical, 0.5});
  CHECK(max_abs(half.data() - identity(2) / 2.0) == 0.0);

  for (double a2 : {0.1, 0.3, 0.77}) {
    const DensityMatrix m = system_marginal({PreparationKind::Entangled, a2});
    CHECK(purity(m) == doctest::Approx(a2 * a2 + (1 - a2) * (1 - a2)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(system_marginal({PreparationKind::Uncorrelated, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(system_marginal({PreparationKind::Uncorrelated, 1.0}), InvalidParameter);
}

TEST_CASE("every preparation has the same one-qubit marginal") {
  for (double a2 : {0.1, 0.5, 0.9, 0.37}) {
    for (int n_atoms : {1, 2}) {
      for (int cutoff : {1, 3}) {
        const ModelParams p = model(n_atoms, cutoff);
        const Role system = n_atoms == 2 ? Role::Atom2 : Role::Atom1;
        for (PreparationKind kind : kAllPreparations) {
          const DensityMatrix rho = initial_state({kind, a2}, p);
          const DensityMatrix m = partial_trace(rho, {system});
          CHECK(max_abs(m.data() - system_marginal({kind, a2}).data()) <= 1e-12);
          if (n_atoms == 2) {
            const DensityMatrix probe = partial_trace(rho, {Role::Atom1});
            CHECK(std::abs(probe.data()(0, 0) - Complex(1.0)) <= 1e-15);
          }
        }
      }
    }
  }
}

TEST_CASE("purity of the prepared states") {
  const ModelParams p = model();
  CHECK(purity(initial_state({PreparationKind::Entangled, 0.3}, p)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(initial_state({PreparationKind::Uncorrelated, 0.5}, p)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("initial excitation number") {
  for (double a2 : {0.2, 0.5, 0.8}) {
    for (int n_atoms : {1, 2}) {
      const ModelParams p = model(n_atoms);
      CHECK(excitation(initial_state({PreparationKind::Uncorrelated, a2}, p), p) ==
            doctest::Approx(1 - a2).epsilon(1e-14));
      CHECK(excitation(initial_state({PreparationKind::Classical, a2}, p), p) ==
            doctest::Approx(1.0).epsilon(1e-14));
      CHECK(excitation(initial_state({PreparationKind::Entangled, a2}, p), p) ==
            doctest::Approx(1.0).epsilon(1e-14));
      CHECK(excitation(initial_state({PreparationKind::QuantumDiscordant, a2}, p), p) ==
            doctest::Approx(1 - a2 + a2 / 2).epsilon(1e-14));
    }
  }
}

TEST_CASE("discordant preparation uses a rank-one mode block in the |g> branch") {
  const double a2 = 0.4;
  const DensityMatrix rho = initial_state({PreparationKind::QuantumDiscordant, a2}, model(1, 2));
  // rows/cols with atom digit 0 form the |g> branch: a2 |phi><phi|
  const Matrix block = rho.data().topLeftCorner(3, 3) / a2;
  CHECK(max_abs(block * block - block) <= 1e-15);
  CHECK(std::abs(block.trace() - Complex(1.0)) <= 1e-15);
}

TEST_CASE("entangled preparation is the expected pure state") {
  const double a2 = 0.25;
  const DensityMatrix rho = initial_state({PreparationKind::Entangled, a2}, model());
  // |Psi> = sqrt(a2)|g1> + sqrt(1-a2)|e0>; basis |g0>,|g1>,|e0>,|e1>
  CHECK(rho.data()(1, 1).real() == doctest::Approx(a2));
  CHECK(rho.data()(2, 2).real() == doctest::Approx(1 - a2));
  CHECK(rho.data()(1, 2).real() == doctest::Approx(std::sqrt(a2 * (1 - a2))));
  const DensityMatrix b = initial_state({PreparationKind::Classical, a2}, model());
  CHECK(std::abs(b.data()(1, 2)) == 0.0);
}

TEST_CASE("correlation class labels and letters") {
  CHECK(state_correlation_class({PreparationKind::Uncorrelated, 0.5}) == CorrelationClass::None);
  CHECK(state_correlation_class({PreparationKind::Classical, 0.5}) == CorrelationClass::ClassicalOnly);
  CHECK(state_correlation_class({PreparationKind::QuantumDiscordant, 0.5}) ==
        CorrelationClass::DiscordNoEntanglement);
  CHECK(state_correlation_class({PreparationKind::Entangled, 0.5}) == CorrelationClass::Entangled);
  for (PreparationKind k : kAllPreparations) {
    CHECK(preparation_from_letter(std::string(1, to_letter(k))) == k);
  }
  CHECK_THROWS_AS(preparation_from_letter("e"), InvalidParameter);
}

TEST_CASE("cutoff below one is rejected") {
  ModelParams p = model();
  p.fock_cutoff = 0;
  CHECK_THROWS_AS(initial_state({PreparationKind::Uncorrelated, 0.5}, p), CutoffTooSmall);
}
