#include <doctest.h>

#include <cmath>

#include "pmwitness/dynamics.hpp"
#include "pmwitness/measures.hpp"
#include "pmwitness/states.hpp"
#include "test_support.hpp"

using namespace pmw;
using pmw::testing::max_abs;

namespace {

ModelParams model(int n_atoms, double gamma, int cutoff = 1) {
  ModelParams p;
  p.n_atoms = n_atoms;
  p.gamma = gamma;
  p.fock_cutoff = cutoff;
  return p;
}

// Excited amplitude for |e>|0> from c'' + (G/2) c' + c = 0, c(0)=1, c'(0)=0.
double excited_population(double gamma, double t) {
  const double s = gamma / 4.0;
  const double d = s * s - 1.0;
  double c;
  if (d < 0) {
    const double w = std::sqrt(-d);
    c = std::exp(-s * t) * (std::cos(w * t) + s / w * std::sin(w * t));
  } else {
    const double k = std::sqrt(d);
    c = std::exp(-s * t) * (std::cosh(k * t) + s / k * std::sinh(k * t));
  }
  return c * c;
}

Trajectory run(PreparationKind kind, const ModelParams& p, IntegratorConfig cfg = {}, double a2 = 0.5) {
  return evolve(initial_state({kind, a2}, p), build_operators(p), p, cfg);
}

}  // namespace

TEST_CASE("integrator config validation") {
  IntegratorConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.steps() == 10000);
  cfg.dt = 0.02;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
  cfg = {};
  cfg.t_max = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
  cfg = {};
  cfg.record_every = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
}

TEST_CASE("recording grid") {
  IntegratorConfig cfg;
  cfg.t_max = 1.0;
  const Trajectory t = run(PreparationKind::Uncorrelated, model(1, 1.0), cfg);
  REQUIRE(t.size() == 101);
  CHECK(t.times.front() == 0.0);
  CHECK(t.times.back() == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < t.size(); ++k) CHECK(t.times[k] > t.times[k - 1]);
  CHECK(t.reduced_states.front().layout() == SpaceLayout::qubit(Role::Atom1));
  CHECK(t.full_states.empty());
}

TEST_CASE("ground state is stationary") {
  const ModelParams p = model(1, 1.0);
  const Ket g0 = Ket::basis(model_layout(p), {0, 0});
  IntegratorConfig cfg;
  cfg.t_max = 2.0;
  const Trajectory t = evolve(DensityMatrix::from_ket(g0), build_operators(p), p, cfg);
  for (const auto& rho : t.reduced_states) {
    CHECK(std::abs(rho.data()(0, 0) - Complex(1.0)) == 0.0);
  }
}

TEST_CASE("excited atom follows the single-excitation closed form") {
  for (double gamma : {1.0, 5.0, 0.3}) {
    const ModelParams p = model(1, gamma);
    const Ket e0 = Ket::basis(model_layout(p), {1, 0});
    const Trajectory t = evolve(DensityMatrix::from_ket(e0), build_operators(p), p, {});
    double worst = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      worst = std::max(worst, std::abs(t.reduced_states[k].data()(1, 1).real() -
                                       excited_population(gamma, t.times[k])));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("physical time scales with omega") {
  // same dimensionless dynamics for any coupling strength
  ModelParams p = model(1, 2.0);
  p.omega = 3.0;
  p.gamma = 6.0;  // gamma/omega = 2
  const Ket e0 = Ket::basis(model_layout(p), {1, 0});
  IntegratorConfig cfg;
  cfg.t_max = 3.0;
  const Trajectory t = evolve(DensityMatrix::from_ket(e0), build_operators(p), p, cfg);
  for (std::size_t k = 0; k < t.size(); k += 50) {
    CHECK(std::abs(t.reduced_states[k].data()(1, 1).real() - excited_population(2.0, t.times[k])) <= 1e-6);
  }
}

TEST_CASE("step halving changes recorded states by at most 1e-9") {
  for (double gamma : {1.0, 5.0}) {
    for (PreparationKind kind : kAllPreparations) {
      const ModelParams p = model(1, gamma);
      IntegratorConfig coarse;
      IntegratorConfig fine;
      fine.dt = coarse.dt / 2;
      fine.record_every = coarse.record_every * 2;
      const Trajectory a = run(kind, p, coarse);
      const Trajectory b = run(kind, p, fine);
      REQUIRE(a.size() == b.size());
      double worst = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.times[k] == doctest::Approx(b.times[k]).epsilon(1e-12));
        worst = std::max(worst, max_abs(a.reduced_states[k].data() - b.reduced_states[k].data()));
      }
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("classical and entangled preparations give identical one-qubit dynamics") {
  for (double gamma : {1.0, 5.0}) {
    const ModelParams p = model(1, gamma);
    const Trajectory b = run(PreparationKind::Classical, p);
    const Trajectory d = run(PreparationKind::Entangled, p);
    for (std::size_t k = 0; k < b.size(); ++k) {
      CHECK(max_abs(b.reduced_states[k].data() - d.reduced_states[k].data()) <= 1e-9);
    }
  }
}

TEST_CASE("full trajectory keeps the initial state and matches reduced traces") {
  const ModelParams p = model(2, 1.0);
  const DensityMatrix rho0 = initial_state({PreparationKind::QuantumDiscordant, 0.5}, p);
  IntegratorConfig cfg;
  cfg.t_max = 3.0;
  const OperatorSet ops = build_operators(p);
  const Trajectory t = evolve_full(rho0, ops, p, cfg);
  REQUIRE(t.full_states.size() == t.size());
  CHECK(max_abs(t.full_states.front().data() - rho0.data()) == 0.0);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(std::abs(t.full_states[k].data().trace() - t.reduced_states[k].data().trace()) <= 1e-14);
    const double n = (ops.number * t.full_states[k].data()).trace().real();
    CHECK(n <= prev + 1e-10);
    prev = n;
  }
}

TEST_CASE("numerical hygiene along figure scenarios") {
  for (int n_atoms : {1, 2}) {
    for (double gamma : {1.0, 5.0}) {
      const ModelParams p = model(n_atoms, gamma);
      for (PreparationKind kind : kAllPreparations) {
        const Trajectory t = run(kind, p);
        for (std::size_t k = 0; k < t.size(); ++k) {
          CHECK(t.diagnostics[k].trace_drift <= 1e-9);
          CHECK(t.diagnostics[k].min_eigenvalue >= -1e-8);
          CHECK(state_defects(t.reduced_states[k].data()).min_eigenvalue >= -1e-8);
        }
      }
    }
  }
}

TEST_CASE("doubling the Fock cutoff leaves figure trajectories unchanged") {
  IntegratorConfig cfg;
  cfg.t_max = 5.0;
  for (int n_atoms : {1, 2}) {
    for (PreparationKind kind : kAllPreparations) {
      const Trajectory lo = run(kind, model(n_atoms, 1.0, 1), cfg);
      const Trajectory hi = run(kind, model(n_atoms, 1.0, 2), cfg);
      for (std::size_t k = 0; k < lo.size(); ++k) {
        CHECK(max_abs(lo.reduced_states[k].data() - hi.reduced_states[k].data()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("weak coupling relaxes to the ground state") {
  IntegratorConfig cfg;
  cfg.t_max = 50.0;
  cfg.record_every = 1000;
  for (PreparationKind kind : kAllPreparations) {
    const Trajectory t = run(kind, model(1, 5.0), cfg);
    const DensityMatrix& last = t.reduced_states.back();
    CHECK(purity(last) > 0.999);
    CHECK(last.data()(0, 0).real() > 0.999);
  }
}

TEST_CASE("observer sees every step") {
  const ModelParams p = model(1, 1.0);
  IntegratorConfig cfg;
  cfg.t_max = 0.5;
  int calls = 0;
  double last_t = -1;
  evolve(initial_state({PreparationKind::Classical, 0.5}, p), build_operators(p), p, cfg,
         [&](double t, const Matrix&) {
           ++calls;
           last_t = t;
         });
  CHECK(calls == 501);
  CHECK(last_t == doctest::Approx(0.5));
}

TEST_CASE("unstable integration is reported with its time") {
  // gamma * dt far outside the RK4 stability region
  const ModelParams p = model(1, 1e4);
  IntegratorConfig cfg;
  cfg.dt = 0.01;
  cfg.t_max = 1.0;
  cfg.record_every = 1;
  try {
    run(PreparationKind::Classical, p, cfg);
    FAIL("expected IntegrationUnstable");
  } catch (const IntegrationUnstable& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() <= 1.0);
  }
}

TEST_CASE("layout mismatch between state and operators") {
  const ModelParams one = model(1, 1.0);
  const ModelParams two = model(2, 1.0);
  CHECK_THROWS_AS(evolve(initial_state({PreparationKind::Classical, 0.5}, one), build_operators(two), two, {}),
                  LayoutMismatch);
}
