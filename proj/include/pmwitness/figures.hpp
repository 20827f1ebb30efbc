#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pmwitness/dynamics.hpp"
#include "pmwitness/measures.hpp"
#include "pmwitness/svg_plot.hpp"

namespace pmw {

struct FigureOptions {
  IntegratorConfig integrator;
  double alpha2 = 0.5;
  OptimizerConfig optimizer;
};

struct FigurePanel {
  std::string stem;  // file name without extension, e.g. "figure1_a"
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  PlotSpec plot;
};

/// Panels of figure 1 (one-qubit purity), 2 (two-qubit purity) or 3
/// (mutual information, classical correlation, entanglement of formation,
/// discord). Throws InvalidParameter for other figure numbers.
std::vector<FigurePanel> build_figure(int which, const FigureOptions& opts = {});

/// Writes one CSV and one SVG per panel into out_dir and returns the paths.
std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& out_dir,
                                                const FigureOptions& opts = {});

}  // namespace pmw
