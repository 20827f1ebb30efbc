#include "pmwitness/figures.hpp"

#include <algorithm>

#include "pmwitness/scenario.hpp"

namespace pmw {

namespace {

LineStyle style_for(PreparationKind k) {
  switch (k) {
    case PreparationKind::Uncorrelated: return LineStyle::Solid;
    case PreparationKind::Classical: return LineStyle::Dotted;
    case PreparationKind::QuantumDiscordant: return LineStyle::Dashed;
    case PreparationKind::Entangled: return LineStyle::DashDot;
  }
  return LineStyle::Solid;
}

std::string letter(PreparationKind k) { return std::string(1, to_letter(k)); }

std::string coupling_label(double g) { return g == 1.0 ? "Γ = Ω" : "Γ = " + format_number(g) + "Ω"; }

ScenarioConfig base_config(const FigureOptions& opts, int n_atoms, double gamma) {
  ScenarioConfig cfg;
  cfg.n_atoms = n_atoms;
  cfg.gamma_over_omega = gamma;
  cfg.alpha2 = opts.alpha2;
  cfg.integrator = opts.integrator;
  cfg.optimizer = opts.optimizer;
  return cfg;
}

// One column of `run.rows` per preparation, gathered into a panel.
FigurePanel gather(const std::string& stem, const std::vector<ScenarioRun>& runs,
                   const std::vector<std::string>& source_columns, bool sided) {
  FigurePanel panel;
  panel.stem = stem;
  panel.columns = {"t_omega"};
  std::vector<std::pair<std::size_t, std::size_t>> picks;  // (run, column)
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& cols = runs[r].columns;
    for (const auto& want : source_columns) {
      const auto it = std::find(cols.begin(), cols.end(), want);
      if (it == cols.end()) throw Error("missing column " + want);
      picks.emplace_back(r, static_cast<std::size_t>(it - cols.begin()));
      std::string name = letter(runs[r].preparation);
      if (sided) name += want.substr(want.size() - 2);  // "_A" / "_B"
      panel.columns.push_back(name);
    }
  }
  const std::size_t n = runs.front().rows.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row{runs.front().rows[k][0]};
    for (const auto& [r, c] : picks) row.push_back(runs[r].rows[k][c]);
    panel.rows.push_back(std::move(row));
  }
  return panel;
}

Curve curve_from(const ScenarioRun& run, std::size_t column, std::string label) {
  Curve c;
  c.label = std::move(label);
  c.style = style_for(run.preparation);
  for (const auto& row : run.rows) {
    c.x.push_back(row[0]);
    c.y.push_back(row[column]);
  }
  return c;
}

std::size_t column_index(const ScenarioRun& run, const std::string& name) {
  const auto it = std::find(run.columns.begin(), run.columns.end(), name);
  if (it == run.columns.end()) throw Error("missing column " + name);
  return static_cast<std::size_t>(it - run.columns.begin());
}

std::vector<FigurePanel> purity_figure(int which, const FigureOptions& opts) {
  const int n_atoms = which == 1 ? 1 : 2;
  std::vector<FigurePanel> panels;
  const std::pair<char, double> couplings[] = {{'a', 1.0}, {'b', 5.0}};
  for (const auto& [tag, gamma] : couplings) {
    ScenarioConfig cfg = base_config(opts, n_atoms, gamma);
    cfg.measures = {Measure::Purity};
    const auto runs = run_scenario(cfg);

    FigurePanel panel = gather("figure" + std::to_string(which) + "_" + tag, runs, {"purity"}, false);
    panel.plot.title = std::string("(") + tag + ") " + (n_atoms == 1 ? "one" : "two") +
                       "-qubit purity, " + coupling_label(gamma);
    panel.plot.y_label = "purity P";
    for (const auto& run : runs) {
      // b and d coincide for a single qubit; draw them as one curve
      if (which == 1 && run.preparation == PreparationKind::Entangled) continue;
      std::string label = "ρ_" + letter(run.preparation);
      if (which == 1 && run.preparation == PreparationKind::Classical) label = "ρ_b = ρ_d";
      panel.plot.curves.push_back(curve_from(run, column_index(run, "purity"), label));
    }
    panels.push_back(std::move(panel));
  }
  return panels;
}

std::vector<FigurePanel> correlation_figure(const FigureOptions& opts) {
  ScenarioConfig cfg = base_config(opts, 2, 1.0);
  cfg.measures = {Measure::MutualInfo, Measure::Classical, Measure::Discord, Measure::Eof};
  cfg.side = SideSelection::Both;
  const auto runs = run_scenario(cfg);

  struct Spec {
    char tag;
    std::vector<std::string> sources;
    std::string plotted;
    std::string y_label;
    std::string title;
  };
  // Sided measures are plotted with the measurement on qubit B (the system qubit).
  const Spec specs[] = {
      {'a', {"mutual_info"}, "mutual_info", "mutual information I", "(a) mutual information"},
      {'b', {"classical_A", "classical_B"}, "classical_B", "classical correlation J",
       "(b) classical correlation"},
      {'c', {"eof"}, "eof", "entanglement of formation EoF", "(c) entanglement of formation"},
      {'d', {"discord_A", "discord_B"}, "discord_B", "quantum discord D", "(d) quantum discord"},
  };

  std::vector<FigurePanel> panels;
  for (const auto& s : specs) {
    FigurePanel panel =
        gather(std::string("figure3_") + s.tag, runs, s.sources, s.sources.size() > 1);
    panel.plot.title = s.title + ", " + coupling_label(1.0);
    panel.plot.y_label = s.y_label;
    for (const auto& run : runs) {
      panel.plot.curves.push_back(
          curve_from(run, column_index(run, s.plotted), "ρ_" + letter(run.preparation)));
    }
    panels.push_back(std::move(panel));
  }
  return panels;
}

}  // namespace

std::vector<FigurePanel> build_figure(int which, const FigureOptions& opts) {
  if (which == 1 || which == 2) return purity_figure(which, opts);
  if (which == 3) return correlation_figure(opts);
  throw InvalidParameter("figure must be 1, 2 or 3");
}

std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& out_dir,
                                                const FigureOptions& opts) {
  const auto panels = build_figure(which, opts);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& panel : panels) {
    const auto csv = out_dir / (panel.stem + ".csv");
    const auto svg = out_dir / (panel.stem + ".svg");
    write_csv_file(csv, panel.columns, panel.rows);
    write_svg_file(svg, panel.plot);
    written.push_back(csv);
    written.push_back(svg);
  }
  return written;
}

}  // namespace pmw
