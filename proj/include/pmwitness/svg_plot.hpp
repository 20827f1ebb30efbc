#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace pmw {

enum class LineStyle { Solid, Dotted, Dashed, DashDot };

struct Curve {
  std::string label;
  LineStyle style = LineStyle::Solid;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label = "Ωt";
  std::string y_label;
  std::vector<Curve> curves;
  int width = 640;
  int height = 420;
};

/// Standalone SVG document (no external references).
std::string render_svg(const PlotSpec& plot);
void write_svg_file(const std::filesystem::path& path, const PlotSpec& plot);

}  // namespace pmw
