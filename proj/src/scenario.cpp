#include "pmwitness/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <future>
#include <ostream>

namespace pmw {

Measure measure_from_string(const std::string& name) {
  if (name == "purity") return Measure::Purity;
  if (name == "mutual_info") return Measure::MutualInfo;
  if (name == "classical") return Measure::Classical;
  if (name == "discord") return Measure::Discord;
  if (name == "eof") return Measure::Eof;
  throw InvalidParameter("unknown measure '" + name +
                         "', expected purity, mutual_info, classical, discord or eof");
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::Purity: return "purity";
    case Measure::MutualInfo: return "mutual_info";
    case Measure::Classical: return "classical";
    case Measure::Discord: return "discord";
    case Measure::Eof: return "eof";
  }
  return "?";
}

SideSelection side_selection_from_string(const std::string& name) {
  if (name == "A") return SideSelection::A;
  if (name == "B") return SideSelection::B;
  if (name == "both") return SideSelection::Both;
  throw InvalidParameter("unknown side '" + name + "', expected A, B or both");
}

void ScenarioConfig::validate() const {
  if (preparations.empty()) throw InvalidParameter("no preparation selected");
  if (!(gamma_over_omega > 0.0)) throw InvalidParameter("gamma/omega must be > 0");
  Preparation{PreparationKind::Uncorrelated, alpha2}.validate();
  model().validate();
  integrator.validate();
  if (measures.empty()) throw InvalidParameter("no measure selected");
}

ModelParams ScenarioConfig::model() const {
  ModelParams p;
  p.n_atoms = n_atoms;
  p.omega = 1.0;
  p.gamma = gamma_over_omega;
  p.fock_cutoff = fock_cutoff;
  return p;
}

namespace {

bool wants(const ScenarioConfig& cfg, Measure m) {
  return std::find(cfg.measures.begin(), cfg.measures.end(), m) != cfg.measures.end();
}

bool wants_side(const ScenarioConfig& cfg, Side s) {
  if (cfg.side == SideSelection::Both) return true;
  return (cfg.side == SideSelection::A) == (s == Side::A);
}

}  // namespace

std::vector<std::string> csv_columns(const ScenarioConfig& cfg) {
  std::vector<std::string> cols{"t_omega"};
  if (wants(cfg, Measure::Purity)) cols.emplace_back("purity");
  if (cfg.n_atoms != 2) return cols;
  if (wants(cfg, Measure::MutualInfo)) cols.emplace_back("mutual_info");
  for (Side s : {Side::A, Side::B}) {
    if (wants(cfg, Measure::Classical) && wants_side(cfg, s)) {
      cols.emplace_back(std::string("classical_") + to_string(s));
    }
  }
  for (Side s : {Side::A, Side::B}) {
    if (wants(cfg, Measure::Discord) && wants_side(cfg, s)) {
      cols.emplace_back(std::string("discord_") + to_string(s));
    }
  }
  if (wants(cfg, Measure::Eof)) cols.emplace_back("eof");
  return cols;
}

std::vector<std::vector<double>> evaluate_measures(const Trajectory& traj,
                                                   const ScenarioConfig& cfg) {
  const bool two = cfg.n_atoms == 2;
  const bool need_j = two && (wants(cfg, Measure::Classical) || wants(cfg, Measure::Discord));
  const bool need_i = two && (wants(cfg, Measure::MutualInfo) || wants(cfg, Measure::Discord));

  std::vector<std::vector<double>> rows;
  rows.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DensityMatrix& rho = traj.reduced_states[k];
    std::vector<double> row{traj.times[k]};
    if (wants(cfg, Measure::Purity)) row.push_back(purity_for_report(rho));
    if (two) {
      const double mi = need_i ? mutual_information(rho) : 0.0;
      std::array<double, 2> j{};
      if (need_j) {
        for (Side s : {Side::A, Side::B}) {
          if (wants_side(cfg, s)) {
            j[s == Side::A ? 0 : 1] = classical_correlation(rho, s, cfg.optimizer).value;
          }
        }
      }
      if (wants(cfg, Measure::MutualInfo)) row.push_back(mi);
      for (Side s : {Side::A, Side::B}) {
        if (wants(cfg, Measure::Classical) && wants_side(cfg, s)) row.push_back(j[s == Side::A ? 0 : 1]);
      }
      for (Side s : {Side::A, Side::B}) {
        if (wants(cfg, Measure::Discord) && wants_side(cfg, s)) {
          double d = mi - j[s == Side::A ? 0 : 1];
          if (d < 0.0 && d >= -tol::kDiscordClamp) d = 0.0;
          row.push_back(d);
        }
      }
      if (wants(cfg, Measure::Eof)) row.push_back(eof(rho));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ScenarioRun run_preparation(const ScenarioConfig& cfg, PreparationKind kind) {
  cfg.validate();
  const ModelParams p = cfg.model();
  const OperatorSet ops = build_operators(p);
  const DensityMatrix rho0 = initial_state(Preparation{kind, cfg.alpha2}, p);

  ScenarioRun run{kind, evolve(rho0, ops, p, cfg.integrator), csv_columns(cfg), {}};
  run.rows = evaluate_measures(run.trajectory, cfg);
  return run;
}

std::vector<ScenarioRun> run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<std::future<ScenarioRun>> jobs;
  for (PreparationKind kind : cfg.preparations) {
    jobs.push_back(std::async(cfg.preparations.size() > 1 ? std::launch::async : std::launch::deferred,
                              [&cfg, kind] { return run_preparation(cfg, kind); }));
  }
  std::vector<ScenarioRun> runs;
  runs.reserve(jobs.size());
  for (auto& j : jobs) runs.push_back(j.get());
  return runs;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  write_csv(os, columns, rows);
  if (!os) throw Error("failed writing " + path.string());
}

}  // namespace pmw
