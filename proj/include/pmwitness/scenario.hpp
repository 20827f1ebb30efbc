#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pmwitness/dynamics.hpp"
#include "pmwitness/measures.hpp"
#include "pmwitness/model.hpp"
#include "pmwitness/states.hpp"

namespace pmw {

enum class Measure { Purity, MutualInfo, Classical, Discord, Eof };

Measure measure_from_string(const std::string& name);
const char* to_string(Measure m);

enum class SideSelection { A, B, Both };

SideSelection side_selection_from_string(const std::string& name);

struct ScenarioConfig {
  std::vector<PreparationKind> preparations{std::begin(kAllPreparations),
                                            std::end(kAllPreparations)};
  int n_atoms = 1;
  double gamma_over_omega = 1.0;
  double alpha2 = 0.5;
  int fock_cutoff = 1;
  IntegratorConfig integrator;
  std::vector<Measure> measures{Measure::Purity, Measure::MutualInfo, Measure::Classical,
                                Measure::Discord, Measure::Eof};
  SideSelection side = SideSelection::Both;
  OptimizerConfig optimizer;

  void validate() const;
  ModelParams model() const;
};

/// Column names in their fixed order, restricted to what the configuration
/// requests. Two-qubit measures appear only for n_atoms = 2.
std::vector<std::string> csv_columns(const ScenarioConfig& cfg);

struct ScenarioRun {
  PreparationKind preparation;
  Trajectory trajectory;
  std::vector<std::string> columns;        // starts with t_omega
  std::vector<std::vector<double>> rows;   // one per recorded time
};

/// Evaluates the requested measures on each recorded reduced state.
std::vector<std::vector<double>> evaluate_measures(const Trajectory& traj,
                                                   const ScenarioConfig& cfg);

ScenarioRun run_preparation(const ScenarioConfig& cfg, PreparationKind kind);

/// Runs every configured preparation, concurrently when more than one.
std::vector<ScenarioRun> run_scenario(const ScenarioConfig& cfg);

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);
void write_csv_file(const std::filesystem::path& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows);

}  // namespace pmw
