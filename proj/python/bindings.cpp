#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmwitness/dynamics.hpp"
#include "pmwitness/figures.hpp"
#include "pmwitness/measures.hpp"
#include "pmwitness/model.hpp"
#include "pmwitness/scenario.hpp"
#include "pmwitness/selftest.hpp"
#include "pmwitness/states.hpp"

namespace py = pybind11;
using namespace pmw;

namespace {

DensityMatrix qubit_state(const Matrix& m) {
  if (m.rows() == 2 && m.cols() == 2) return DensityMatrix(SpaceLayout::qubit(Role::Atom1), m);
  if (m.rows() == 4 && m.cols() == 4) {
    return DensityMatrix(SpaceLayout{{Role::Atom1, 2}, {Role::Atom2, 2}}, m);
  }
  throw InvalidParameter("expected a 2x2 or 4x4 density matrix");
}

Side side_from(const std::string& s) {
  if (s == "A") return Side::A;
  if (s == "B") return Side::B;
  throw InvalidParameter("side must be 'A' or 'B'");
}

ModelParams params(int n_atoms, double gamma_over_omega, int fock_cutoff) {
  ModelParams p;
  p.n_atoms = n_atoms;
  p.gamma = gamma_over_omega;
  p.fock_cutoff = fock_cutoff;
  p.validate();
  return p;
}

py::dict trajectory_dict(const Trajectory& t) {
  py::dict d;
  d["times"] = t.times;
  std::vector<Matrix> states;
  std::vector<double> drift, min_eig;
  for (std::size_t k = 0; k < t.size(); ++k) {
    states.push_back(t.reduced_states[k].data());
    drift.push_back(t.diagnostics[k].trace_drift);
    min_eig.push_back(t.diagnostics[k].min_eigenvalue);
  }
  d["states"] = states;
  d["trace_drift"] = drift;
  d["min_eigenvalue"] = min_eig;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pmwitness, m) {
  m.doc() = "Pseudo-mode qubit dynamics with purity and correlation witnesses";

  py::register_exception<Error>(m, "PmwError", PyExc_ValueError);
  py::register_exception<IntegrationUnstable>(m, "IntegrationUnstable", PyExc_RuntimeError);

  m.def("spectral_density",
        [](double omega, double gamma, double omega0, double w) {
          ModelParams p;
          p.omega = omega;
          p.gamma = gamma;
          p.omega0 = omega0;
          return spectral_density(p, w);
        },
        py::arg("omega"), py::arg("gamma"), py::arg("omega0"), py::arg("w"));

  m.def("regime",
        [](double omega, double gamma) {
          ModelParams p;
          p.omega = omega;
          p.gamma = gamma;
          return std::string(to_string(regime(p)));
        },
        py::arg("omega"), py::arg("gamma"));

  m.def("interaction_hamiltonian",
        [](int n_atoms, int fock_cutoff) { return build_operators(params(n_atoms, 1.0, fock_cutoff)).V; },
        py::arg("n_atoms") = 1, py::arg("fock_cutoff") = 1);

  m.def("initial_state",
        [](const std::string& prep, double alpha2, int n_atoms, int fock_cutoff) {
          return initial_state({preparation_from_letter(prep), alpha2},
                               params(n_atoms, 1.0, fock_cutoff))
              .data();
        },
        py::arg("prep"), py::arg("alpha2") = 0.5, py::arg("n_atoms") = 1, py::arg("fock_cutoff") = 1,
        "Full atom(s) + pseudo-mode initial state for preparation 'a'..'d'.");

  m.def("evolve",
        [](const std::string& prep, double alpha2, int n_atoms, double gamma_over_omega, double dt,
           double t_max, int record_every, int fock_cutoff) {
          const ModelParams p = params(n_atoms, gamma_over_omega, fock_cutoff);
          IntegratorConfig cfg;
          cfg.dt = dt;
          cfg.t_max = t_max;
          cfg.record_every = record_every;
          const OperatorSet ops = build_operators(p);
          const DensityMatrix rho0 = initial_state({preparation_from_letter(prep), alpha2}, p);
          Trajectory t;
          {
            py::gil_scoped_release release;
            t = evolve(rho0, ops, p, cfg);
          }
          return trajectory_dict(t);
        },
        py::arg("prep"), py::arg("alpha2") = 0.5, py::arg("n_atoms") = 1,
        py::arg("gamma_over_omega") = 1.0, py::arg("dt") = 1e-3, py::arg("t_max") = 10.0,
        py::arg("record_every") = 10, py::arg("fock_cutoff") = 1,
        "Integrate one preparation; returns times, reduced atomic states and diagnostics.");

  m.def("purity", [](const Matrix& rho) { return purity(qubit_state(rho)); }, py::arg("rho"));
  m.def("entropy", [](const Matrix& rho) { return entropy(qubit_state(rho)); }, py::arg("rho"));
  m.def("mutual_information", [](const Matrix& rho) { return mutual_information(qubit_state(rho)); },
        py::arg("rho"));
  m.def("classical_correlation",
        [](const Matrix& rho, const std::string& side) {
          const auto cc = classical_correlation(qubit_state(rho), side_from(side));
          return py::make_tuple(cc.value, cc.argmin.theta, cc.argmin.phi);
        },
        py::arg("rho"), py::arg("side") = "B",
        "Returns (J, theta, phi) with the optimal measurement angles.");
  m.def("discord",
        [](const Matrix& rho, const std::string& side) { return discord(qubit_state(rho), side_from(side)); },
        py::arg("rho"), py::arg("side") = "B");
  m.def("concurrence", [](const Matrix& rho) { return concurrence(qubit_state(rho)); }, py::arg("rho"));
  m.def("eof", [](const Matrix& rho) { return eof(qubit_state(rho)); }, py::arg("rho"));
  m.def("report",
        [](const Matrix& rho, const std::string& side) {
          const MeasureReport r = report(qubit_state(rho), side_from(side));
          py::dict d;
          d["purity"] = r.purity;
          d["entropy_A"] = r.entropy_A;
          if (r.two_qubit) {
            d["entropy_B"] = r.entropy_B;
            d["entropy_AB"] = r.entropy_AB;
            d["mutual_info"] = r.mutual_info;
            d["classical_corr"] = r.classical_corr;
            d["discord"] = r.discord;
            d["concurrence"] = r.concurrence;
            d["eof"] = r.eof;
            d["measured_side"] = std::string(to_string(r.measured_side));
          }
          return d;
        },
        py::arg("rho"), py::arg("side") = "B");

  m.def("simulate",
        [](const std::string& prep, int n_atoms, double gamma_over_omega, double alpha2, double dt,
           double t_max, int record_every, const std::string& side) {
          ScenarioConfig cfg;
          cfg.preparations = {preparation_from_letter(prep)};
          cfg.n_atoms = n_atoms;
          cfg.gamma_over_omega = gamma_over_omega;
          cfg.alpha2 = alpha2;
          cfg.integrator.dt = dt;
          cfg.integrator.t_max = t_max;
          cfg.integrator.record_every = record_every;
          cfg.side = side_selection_from_string(side);
          ScenarioRun run = [&] {
            py::gil_scoped_release release;
            return run_preparation(cfg, cfg.preparations.front());
          }();
          py::dict d;
          for (std::size_t c = 0; c < run.columns.size(); ++c) {
            std::vector<double> col;
            col.reserve(run.rows.size());
            for (const auto& row : run.rows) col.push_back(row[c]);
            d[py::str(run.columns[c])] = col;
          }
          return d;
        },
        py::arg("prep"), py::arg("n_atoms") = 1, py::arg("gamma_over_omega") = 1.0,
        py::arg("alpha2") = 0.5, py::arg("dt") = 1e-3, py::arg("t_max") = 10.0,
        py::arg("record_every") = 10, py::arg("side") = "both",
        "Measure columns (same names as the CLI CSV) for one preparation.");

  m.def("reproduce_figure",
        [](int which, const std::string& out_dir, double t_max, double dt, int record_every) {
          FigureOptions opts;
          opts.integrator.t_max = t_max;
          opts.integrator.dt = dt;
          opts.integrator.record_every = record_every;
          std::vector<std::string> paths;
          for (const auto& p : write_figure(which, out_dir, opts)) paths.push_back(p.string());
          return paths;
        },
        py::arg("which"), py::arg("out_dir"), py::arg("t_max") = 10.0, py::arg("dt") = 1e-3,
        py::arg("record_every") = 10);

  m.def("selftest",
        []() {
          std::vector<py::tuple> out;
          for (const auto& c : run_selftest()) out.push_back(py::make_tuple(c.name, c.passed, c.observed, c.tolerance));
          return out;
        },
        "List of (name, passed, observed, tolerance).");
}
