#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pmwitness/core.hpp"
#include "pmwitness/model.hpp"

namespace pmw {

/// Fixed-step RK4 settings. Times are dimensionless (Omega t).
struct IntegratorConfig {
  double dt = 1e-3;
  double t_max = 10.0;
  int record_every = 10;
  bool hermitize = true;

  void validate() const;
  /// Number of RK4 steps needed to reach t_max.
  long steps() const;
};

struct SampleDiagnostics {
  double trace_drift;          // |Tr rho - 1| of the full state
  double min_eigenvalue;       // of the full state
  double hermiticity_defect;   // of the raw RK4 output before symmetrization
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> reduced_states;  // atoms only, pseudo-mode traced out
  std::vector<SampleDiagnostics> diagnostics;
  std::vector<DensityMatrix> full_states;     // empty unless evolve_full was used

  std::size_t size() const { return times.size(); }
};

/// Called after every RK4 step (and once at t = 0) with the current full state.
using StepObserver = std::function<void(double t_omega, const Matrix& rho)>;

/// Abort thresholds for the per-sample diagnostics.
inline constexpr double kMaxTraceDrift = 1e-6;
inline constexpr double kMinEigenvalueFloor = -1e-6;

/// Integrates the pseudo-mode master equation from rho0 and records the
/// atomic reduced state every cfg.record_every steps. The trace is never
/// renormalized. Throws IntegrationUnstable when a diagnostic threshold is
/// exceeded and LayoutMismatch when rho0 is not over ops.layout.
Trajectory evolve(const DensityMatrix& rho0, const OperatorSet& ops, const ModelParams& p,
                  const IntegratorConfig& cfg, const StepObserver& observer = {});

/// As evolve, additionally keeping the full atom + pseudo-mode states.
Trajectory evolve_full(const DensityMatrix& rho0, const OperatorSet& ops, const ModelParams& p,
                       const IntegratorConfig& cfg, const StepObserver& observer = {});

/// Roles kept in recorded states for the given model.
std::vector<Role> atomic_roles(const ModelParams& p);

}  // namespace pmw
