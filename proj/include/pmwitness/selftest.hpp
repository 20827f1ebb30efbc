#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pmwitness/dynamics.hpp"

namespace pmw {

struct SelfTestOptions {
  IntegratorConfig integrator;  // t_max is ignored; checks run to Omega t = 10
  double alpha2 = 0.5;
  int oracle_states = 3;
  std::uint64_t seed = 20240611;
};

struct SelfTestCheck {
  std::string name;
  double tolerance;
  double observed;  // NaN when the check could not run
  bool passed;
  std::string detail;
};

std::vector<SelfTestCheck> run_selftest(const SelfTestOptions& opts = {});

/// One line per check; returns true iff all passed.
bool print_selftest(std::ostream& os, const std::vector<SelfTestCheck>& checks);

/// Excited-state amplitude of a single atom starting in |e>|0> under the
/// pseudo-mode model, in closed form (real for this initial state).
double single_excitation_amplitude(double gamma_over_omega, double t_omega);

}  // namespace pmw
