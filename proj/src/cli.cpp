#include "pmwitness/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pmwitness/figures.hpp"
#include "pmwitness/scenario.hpp"
#include "pmwitness/selftest.hpp"

namespace pmw::cli {

namespace {

std::string env_name(const std::string& key) {
  std::string name = kEnvPrefix;
  for (char c : key) name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key=value lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidParameter(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

bool flag_given(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Splices config-file values in after the subcommand name, skipping keys
// already set by a flag or an environment variable.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) {
    if (const char* env = std::getenv(env_name("config").c_str())) path = env;
  }
  if (path.empty()) return args;

  const auto sub = std::find_if(args.begin(), args.end(),
                                [](const std::string& a) { return !a.empty() && a[0] != '-'; });
  if (sub == args.end()) return args;

  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config(path)) {
    if (key == "config" || flag_given(args, key) || std::getenv(env_name(key).c_str())) continue;
    injected.push_back("--" + key);
    injected.push_back(value);
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

struct Flags {
  std::string prep = "all";
  int atoms = 1;
  double gamma_over_omega = 1.0;
  double alpha2 = 0.5;
  double t_max = IntegratorConfig{}.t_max;
  double dt = IntegratorConfig{}.dt;
  int record_every = IntegratorConfig{}.record_every;
  int fock_cutoff = 1;
  std::string side = "both";
  std::vector<std::string> measures{"purity", "mutual_info", "classical", "discord", "eof"};
  std::string out = ".";
  std::string config;
  int figure = 0;
};

CLI::Option* with_env(CLI::Option* opt, const std::string& key) {
  return opt->envname(env_name(key));
}

void add_integrator_flags(CLI::App* sub, Flags& f) {
  with_env(sub->add_option("--t-max", f.t_max, "final dimensionless time Omega t"), "t-max")
      ->capture_default_str();
  with_env(sub->add_option("--dt", f.dt, "RK4 step in units of 1/Omega"), "dt")->capture_default_str();
  with_env(sub->add_option("--record-every", f.record_every, "record every N steps"), "record-every")
      ->capture_default_str();
  with_env(sub->add_option("--alpha2", f.alpha2, "population of |g> in the qubit marginal"), "alpha2")
      ->capture_default_str();
  sub->add_option("--config", f.config, "key=value file; flags and environment take precedence");
}

IntegratorConfig integrator_from(const Flags& f) {
  IntegratorConfig cfg;
  cfg.dt = f.dt;
  cfg.t_max = f.t_max;
  cfg.record_every = f.record_every;
  return cfg;
}

std::string stats_line(const ScenarioRun& run) {
  double drift = 0.0, min_eig = 1.0;
  for (const auto& d : run.trajectory.diagnostics) {
    drift = std::max(drift, d.trace_drift);
    min_eig = std::min(min_eig, d.min_eigenvalue);
  }
  std::ostringstream os;
  os << "prep " << to_letter(run.preparation) << ": " << run.rows.size() << " samples to t="
     << format_number(run.trajectory.times.back());
  const auto& last = run.rows.back();
  for (std::size_t c = 1; c < run.columns.size(); ++c) {
    os << ", final " << run.columns[c] << "=" << format_number(last[c]);
  }
  os << ", max trace drift=" << format_number(drift) << ", min eigenvalue=" << format_number(min_eig);
  return os.str();
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  ScenarioConfig cfg;
  if (f.prep == "all") {
    cfg.preparations.assign(std::begin(kAllPreparations), std::end(kAllPreparations));
  } else {
    cfg.preparations = {preparation_from_letter(f.prep)};
  }
  cfg.n_atoms = f.atoms;
  cfg.gamma_over_omega = f.gamma_over_omega;
  cfg.alpha2 = f.alpha2;
  cfg.fock_cutoff = f.fock_cutoff;
  cfg.integrator = integrator_from(f);
  cfg.side = side_selection_from_string(f.side);
  cfg.measures.clear();
  for (const auto& m : f.measures) cfg.measures.push_back(measure_from_string(m));
  cfg.validate();

  const auto runs = run_scenario(cfg);
  std::filesystem::create_directories(f.out);
  std::vector<std::string> lines;
  for (const auto& run : runs) {
    const auto path = std::filesystem::path(f.out) / (std::string("trajectory_") + to_letter(run.preparation) + ".csv");
    write_csv_file(path, run.columns, run.rows);
    lines.push_back(stats_line(run) + " -> " + path.string());
  }
  out << "simulate: " << cfg.n_atoms << " atom(s), gamma/omega=" << format_number(cfg.gamma_over_omega)
      << " (" << to_string(regime(cfg.model())) << " coupling), alpha2=" << format_number(cfg.alpha2)
      << '\n';
  for (const auto& l : lines) out << l << '\n';
  return kOk;
}

int cmd_reproduce(const Flags& f, std::ostream& out) {
  FigureOptions opts;
  opts.integrator = integrator_from(f);
  opts.alpha2 = f.alpha2;
  opts.integrator.validate();
  Preparation{PreparationKind::Uncorrelated, f.alpha2}.validate();
  const auto written = write_figure(f.figure, f.out, opts);
  out << "figure " << f.figure << ": wrote " << written.size() << " files\n";
  for (const auto& p : written) out << "  " << p.string() << '\n';
  return kOk;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
  SelfTestOptions opts;
  opts.integrator.dt = f.dt;
  opts.integrator.record_every = f.record_every;
  opts.alpha2 = f.alpha2;
  return print_selftest(out, run_selftest(opts)) ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Pseudo-mode simulation of qubits in a Lorentzian reservoir with purity and "
               "correlation witnesses",
               "pmwitness"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "integrate one scenario and write CSV trajectories");
  with_env(sim->add_option("--prep", f.prep, "preparation a|b|c|d|all"), "prep")
      ->check(CLI::IsMember({"a", "b", "c", "d", "all"}))
      ->capture_default_str();
  with_env(sim->add_option("--atoms", f.atoms, "1 (system only) or 2 (probe + system)"), "atoms")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  with_env(sim->add_option("--gamma-over-omega", f.gamma_over_omega, "pseudo-mode decay rate Gamma/Omega"),
           "gamma-over-omega")
      ->capture_default_str();
  with_env(sim->add_option("--side", f.side, "measured qubit for classical correlation and discord"), "side")
      ->check(CLI::IsMember({"A", "B", "both"}))
      ->capture_default_str();
  with_env(sim->add_option("--measures", f.measures,
                           "comma-separated subset of purity,mutual_info,classical,discord,eof"),
           "measures")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  with_env(sim->add_option("--fock-cutoff", f.fock_cutoff, "highest pseudo-mode Fock level"), "fock-cutoff")
      ->capture_default_str();
  with_env(sim->add_option("--out", f.out, "output directory"), "out")->capture_default_str();
  add_integrator_flags(sim, f);

  auto* fig = app.add_subcommand("reproduce-figure", "write CSV + SVG panels for figure 1, 2 or 3");
  fig->add_option("figure", f.figure, "figure number")->required()->check(CLI::IsMember({1, 2, 3}));
  with_env(fig->add_option("--out", f.out, "output directory"), "out")->capture_default_str();
  add_integrator_flags(fig, f);

  auto* self = app.add_subcommand("selftest", "run the oracle and invariant checks");
  add_integrator_flags(self, f);

  std::vector<std::string> args;
  try {
    args = apply_config(raw_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (sim->parsed()) return cmd_simulate(f, out);
    if (fig->parsed()) return cmd_reproduce(f, out);
    if (self->parsed()) return cmd_selftest(f, out);
  } catch (const IntegrationUnstable& e) {
    err << "error: " << e.what() << '\n';
    return kUnstable;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace pmw::cli
