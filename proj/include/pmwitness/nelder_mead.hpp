#pragma once

#include <array>
#include <functional>

namespace pmw {

struct NelderMeadOptions {
  double tolerance = 1e-10;  // stop once f_worst - f_best <= tolerance
  int max_iterations = 2000;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::array<double, 2> x;
  double value;
  int iterations;
  bool converged;
};

/// Downhill simplex minimization in two variables, started from the simplex
/// {start, start + (step0, 0), start + (0, step1)}. The returned value never
/// exceeds f(start).
NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                std::array<double, 2> start, std::array<double, 2> step,
                                const NelderMeadOptions& opts = {});

}  // namespace pmw
