// bindings.cpp — pybind11 interface exposing the toolkit's main operations.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctfreq/figures.hpp"
#include "ctfreq/ion_crystal.hpp"
#include "ctfreq/ramsey.hpp"

namespace py = pybind11;
using namespace ctfreq;

namespace {

py::dict modes_to_dict(const NormalModeResult& m) {
    py::dict out;
    out["equilibrium_positions"] = m.equilibrium_positions;
    out["mode_frequencies"] = m.mode_frequencies;
    out["mode_matrix"] = m.mode_matrix;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coherence-trapped frequency estimation: Lindblad dynamics, "
              "decoherence functions and precision bounds";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NumericalError>(m, "NumericalError");
    py::register_exception<ConvergenceError>(m, "ConvergenceError");

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("omega", &SystemParams::omega)
        .def_readwrite("omega_tilde", &SystemParams::omega_tilde)
        .def_readwrite("omega_m", &SystemParams::omega_m)
        .def_readwrite("lambda_", &SystemParams::lambda)
        .def_readwrite("lambda_tilde", &SystemParams::lambda_tilde)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("gamma_se", &SystemParams::gamma_se)
        .def_readwrite("n_bar", &SystemParams::n_bar)
        .def_readwrite("n_max", &SystemParams::n_max);

    // operator and state factories
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("boson_ops", [](int n_max) { return boson_ops(n_max); }, py::arg("n_max"));
    m.def("thermal_state",
          [](double n_bar, int n_max) { return thermal_state(n_bar, n_max).matrix; },
          py::arg("n_bar"), py::arg("n_max"));
    m.def("qubit_superposition_state", [] { return qubit_superposition_state().matrix; });
    m.def("partial_trace",
          [](const ComplexMatrix& rho, const std::vector<int>& dims, int keep) {
              return partial_trace(DensityMatrix(CompositeSpace(dims), rho), keep).matrix;
          },
          py::arg("rho"), py::arg("dims"), py::arg("keep"));

    // closed-form decoherence functions
    m.def("f_basic", &f_basic, py::arg("t"), py::arg("params"));
    m.def("f_ct", &f_ct, py::arg("t"), py::arg("params"));
    m.def("c_infinity", &c_infinity, py::arg("lambda_"), py::arg("lambda_tilde"));
    m.def("amplitude_evolution",
          [](double t, const SystemParams& p, Complex kappa0) {
              const AmplitudeState s = amplitude_evolution(t, p, kappa0);
              return py::make_tuple(s.kappa, s.a_amp, s.kappa_tilde);
          },
          py::arg("t"), py::arg("params"), py::arg("kappa0") = Complex(1, 0));

    // precision functionals
    m.def("crb_bound", &crb_bound, py::arg("t"), py::arg("n_probes"), py::arg("total_time"),
          py::arg("f_mod"));
    m.def("minimize_bound",
          [](const SystemParams& p, double n, double total_time, double t_lo, double t_hi) {
              const BoundCurve c = minimize_bound(p, n, total_time, {t_lo, t_hi});
              py::dict out;
              out["times"] = c.times;
              out["values"] = c.values;
              out["t_opt"] = c.t_opt;
              out["min_value"] = c.min_value;
              return out;
          },
          py::arg("params"), py::arg("n_probes"), py::arg("total_time"), py::arg("t_lo"),
          py::arg("t_hi"));
    m.def("asymptotic_entangled_error", &asymptotic_entangled_error, py::arg("n_probes"),
          py::arg("total_time"), py::arg("lambda_"));
    m.def("ramsey_signal", &ramsey_signal, py::arg("f_tilde"));
    m.def("ramsey_uncertainty", &ramsey_uncertainty, py::arg("p_signal"), py::arg("dp_domega"),
          py::arg("t_bar"), py::arg("n_probes"), py::arg("total_time"));
    m.def("ct_min_error", &ct_min_error, py::arg("n_probes"), py::arg("total_time"),
          py::arg("t_bar"), py::arg("c_inf"));
    m.def("gain", &gain, py::arg("n_probes"), py::arg("t_bar"), py::arg("lambda_"),
          py::arg("lambda_tilde"));
    m.def("signal_derivative", &signal_derivative, py::arg("p_grid"));

    // Lindblad engine and the Ramsey cycle
    m.def("evolve_probe_coherence",
          [](const SystemParams& p, bool with_ancilla, double t_final, double dt,
             int sample_count) {
              const LindbladModel model =
                  with_ancilla ? build_ancilla_model(p) : build_probe_mode_model(p);
              const DensityMatrix rho0 =
                  apply_pi_half_pulse(ramsey_ground_state(p, with_ancilla), 0);
              std::vector<double> times;
              std::vector<Complex> coherence;
              for (const auto& pt :
                   evolve(model, rho0, t_final, dt > 0 ? dt : default_dt(p), sample_count)) {
                  times.push_back(pt.time);
                  coherence.push_back(partial_trace(pt.state, 0).matrix(1, 0) / Complex(0, 0.5));
              }
              return py::make_tuple(times, coherence);
          },
          py::arg("params"), py::arg("with_ancilla"), py::arg("t_final"), py::arg("dt") = 0.0,
          py::arg("sample_count") = 100,
          "normalized probe coherence rho_10(t)/rho_10(0) along a Ramsey free evolution");
    m.def("simulate_ramsey_signal",
          [](const SystemParams& p, double t_final, double dt, int sample_count) {
              RamseyRunOptions opts;
              opts.dt = dt;
              opts.sample_count = sample_count;
              std::vector<double> times, signal;
              for (const auto& s : simulate_ramsey_signal(p, t_final, opts)) {
                  times.push_back(s.time);
                  signal.push_back(s.signal);
              }
              return py::make_tuple(times, signal);
          },
          py::arg("params"), py::arg("t_final"), py::arg("dt") = 0.0,
          py::arg("sample_count") = 100);

    // ion crystal
    py::class_<CrystalConfig>(m, "CrystalConfig")
        .def(py::init<>())
        .def_readwrite("masses_amu", &CrystalConfig::masses_amu)
        .def_readwrite("reference_mass_amu", &CrystalConfig::reference_mass_amu)
        .def_readwrite("omega_z", &CrystalConfig::omega_z)
        .def_readwrite("laser_wavelength", &CrystalConfig::laser_wavelength)
        .def_readwrite("laser_axis_projection", &CrystalConfig::laser_axis_projection);
    m.def("equilibrium_positions", &equilibrium_positions, py::arg("config"));
    m.def("normal_modes", [](const CrystalConfig& c) { return modes_to_dict(normal_modes(c)); },
          py::arg("config"));
    m.def("lamb_dicke",
          [](const CrystalConfig& c, int ion, int mode) {
              return lamb_dicke(c, ion, mode, normal_modes(c));
          },
          py::arg("config"), py::arg("ion"), py::arg("mode"));
    m.def("effective_couplings",
          [](const CrystalConfig& c, const std::vector<double>& rabi) {
              return effective_couplings(c, normal_modes(c), rabi);
          },
          py::arg("config"), py::arg("rabi"));
    m.def("required_rabi",
          [](const CrystalConfig& c, const std::vector<double>& targets) {
              return required_rabi(c, normal_modes(c), targets);
          },
          py::arg("config"), py::arg("target_couplings"));

    m.attr("__version__") = kVersion;
}
