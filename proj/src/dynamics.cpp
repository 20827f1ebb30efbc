#include "pmwitness/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace pmw {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0 && dt <= 0.01)) throw InvalidParameter("dt must lie in (0, 0.01]");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidParameter("t_max must be > 0");
  if (record_every < 1) throw InvalidParameter("record_every must be >= 1");
}

long IntegratorConfig::steps() const {
  return static_cast<long>(std::ceil(t_max / dt - 1e-9));
}

std::vector<Role> atomic_roles(const ModelParams& p) {
  if (p.n_atoms == 2) return {Role::Atom1, Role::Atom2};
  return {Role::Atom1};
}

namespace {

Trajectory integrate(const DensityMatrix& rho0, const OperatorSet& ops, const ModelParams& p,
                     const IntegratorConfig& cfg, const StepObserver& observer, bool keep_full) {
  p.validate();
  cfg.validate();
  if (!(rho0.layout() == ops.layout)) {
    throw LayoutMismatch("initial state layout " + describe(rho0.layout()) +
                         " differs from operator layout " + describe(ops.layout));
  }

  const std::vector<Role> keep = atomic_roles(p);
  const double h = cfg.dt / p.omega;  // physical step
  const long n_steps = cfg.steps();

  Trajectory traj;
  const auto n_records = static_cast<std::size_t>(n_steps / cfg.record_every + 1);
  traj.times.reserve(n_records);
  traj.reduced_states.reserve(n_records);
  traj.diagnostics.reserve(n_records);

  auto record = [&](long step, const Matrix& rho, double raw_defect) {
    const double t = static_cast<double>(step) * cfg.dt;
    const StateDefects d = state_defects(rho);
    if (d.trace_drift > kMaxTraceDrift || d.min_eigenvalue < kMinEigenvalueFloor) {
      std::ostringstream os;
      os << "integration unstable at Omega t = " << t << " (trace drift " << d.trace_drift
         << ", min eigenvalue " << d.min_eigenvalue << ")";
      throw IntegrationUnstable(os.str(), t);
    }
    traj.times.push_back(t);
    traj.diagnostics.push_back({d.trace_drift, d.min_eigenvalue, raw_defect});
    SpaceLayout kept;
    Matrix reduced = partial_trace(rho, ops.layout, keep, &kept);
    traj.reduced_states.emplace_back(std::move(kept), std::move(reduced), DensityMatrix::Unchecked{});
    if (keep_full) traj.full_states.emplace_back(ops.layout, rho, DensityMatrix::Unchecked{});
  };

  Matrix rho = rho0.data();
  const auto n = rho.rows();
  Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);

  record(0, rho, hermiticity_defect(rho));
  if (observer) observer(0.0, rho);

  for (long step = 1; step <= n_steps; ++step) {
    liouvillian_rhs(ops, p.gamma, rho, k1);
    tmp = rho + (0.5 * h) * k1;
    liouvillian_rhs(ops, p.gamma, tmp, k2);
    tmp = rho + (0.5 * h) * k2;
    liouvillian_rhs(ops, p.gamma, tmp, k3);
    tmp = rho + h * k3;
    liouvillian_rhs(ops, p.gamma, tmp, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const bool recording = step % cfg.record_every == 0;
    const double raw_defect = recording ? hermiticity_defect(rho) : 0.0;
    if (cfg.hermitize) {
      tmp = 0.5 * (rho + rho.adjoint());
      rho.swap(tmp);
    }

    const double drift = std::abs(rho.trace() - Complex(1.0));
    if (drift > kMaxTraceDrift || !std::isfinite(drift)) {
      const double t = static_cast<double>(step) * cfg.dt;
      std::ostringstream os;
      os << "integration unstable at Omega t = " << t << " (trace drift " << drift << ")";
      throw IntegrationUnstable(os.str(), t);
    }
    if (recording) record(step, rho, raw_defect);
    if (observer) observer(static_cast<double>(step) * cfg.dt, rho);
  }
  return traj;
}

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const OperatorSet& ops, const ModelParams& p,
                  const IntegratorConfig& cfg, const StepObserver& observer) {
  return integrate(rho0, ops, p, cfg, observer, false);
}

Trajectory evolve_full(const DensityMatrix& rho0, const OperatorSet& ops, const ModelParams& p,
                       const IntegratorConfig& cfg, const StepObserver& observer) {
  return integrate(rho0, ops, p, cfg, observer, true);
}

}  // namespace pmw
