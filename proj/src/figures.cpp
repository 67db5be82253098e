#include "ctfreq/figures.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ctfreq/ion_crystal.hpp"
#include "ctfreq/parallel.hpp"
#include "ctfreq/ramsey.hpp"

namespace ctfreq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * constants::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// empty cell = divergence sentinel
std::string cell(double v) { return std::isfinite(v) ? num(v) : std::string(); }

std::string csv_preamble(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "# ctfreq " << kVersion << " scenario=" << cfg.scenario
        << " config_hash=" << config_hash(cfg) << "\n";
    return out.str();
}

std::vector<double> scan_grid_rad(const ScanSpec& scan) {
    std::vector<double> w(scan.n_points);
    for (int i = 0; i < scan.n_points; ++i) {
        const double nu = scan.omega_min_hz +
                          (scan.omega_max_hz - scan.omega_min_hz) * i / (scan.n_points - 1);
        w[i] = kTwoPi * nu;
    }
    return w;
}

// Ramsey signal over the (n_bar, omega) grid. p[nb][iw][s] is the signal at
// sample s. The n_bar = 0 entry is the idealized zero-temperature reference:
// it runs without spontaneous emission, matching the model behind the
// analytic asymptotic-coherence results.
struct SweepResult {
    std::vector<double> omegas;  // rad/s
    std::vector<double> times;   // s
    std::vector<std::vector<std::vector<double>>> p;
};

SweepResult ramsey_sweep(const ScenarioConfig& cfg, double t_final_s, int sample_count) {
    SweepResult res;
    res.omegas = scan_grid_rad(cfg.scan);
    res.times.resize(sample_count + 1);
    for (int s = 0; s <= sample_count; ++s) res.times[s] = t_final_s * s / sample_count;

    const int n_nb = static_cast<int>(cfg.n_bar_list.size());
    const int n_w = static_cast<int>(res.omegas.size());
    res.p.assign(n_nb, std::vector<std::vector<double>>(n_w));

    const double gamma = cfg.params.gamma_angular();
    const double dt = cfg.time.dt_gamma > 0 ? cfg.time.dt_gamma / gamma : 0.0;
    const bool track_ancilla = !cfg.params.omega_tilde_hz.has_value();

    parallel_for(n_nb * n_w, cfg.threads, [&](int idx) {
        const int nb = idx / n_w;
        const int iw = idx % n_w;
        SystemParams p = cfg.params.to_angular();
        p.omega = res.omegas[iw];
        if (track_ancilla) p.omega_tilde = p.omega;
        p.n_bar = cfg.n_bar_list[nb];
        if (p.n_bar == 0.0) p.gamma_se = 0.0;
        RamseyRunOptions opts;
        opts.dt = dt;
        opts.sample_count = sample_count;
        const auto samples = simulate_ramsey_signal(p, t_final_s, opts);
        std::vector<double> row(samples.size());
        for (std::size_t s = 0; s < samples.size(); ++s) row[s] = samples[s].signal;
        res.p[nb][iw] = std::move(row);
    });
    return res;
}

// dP/domega on the omega grid at fixed interrogation time: central
// differences with the first-null frequency-response correction
// (h t / sin(h t)), which removes the attenuation a plain central difference
// applies to the cos(omega t) Ramsey fringe. Edge points use uncorrected
// one-sided stencils and are excluded from minima.
std::vector<double> fringe_derivative(const std::vector<double>& omegas,
                                      const std::vector<double>& p, double t_bar) {
    std::vector<std::pair<double, double>> grid(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i) grid[i] = {omegas[i], p[i]};
    auto deriv = signal_derivative(grid);
    const double h = omegas[1] - omegas[0];
    const double ht = h * t_bar;
    const double correction = (ht > 1e-12 && ht < 1.0) ? ht / std::sin(ht) : 1.0;
    std::vector<double> out(deriv.size());
    for (std::size_t i = 0; i < deriv.size(); ++i) out[i] = deriv[i].second;
    for (std::size_t i = 1; i + 1 < deriv.size(); ++i) out[i] *= correction;
    return out;
}

// Eq.-(10)-style uncertainty row over omega; slopes indistinguishable from
// zero (below 1e-9 of the largest interior slope) are treated as divergent.
std::vector<double> uncertainty_row(const std::vector<double>& omegas,
                                    const std::vector<double>& p, double t_bar, double n_probes,
                                    double total_time) {
    const auto deriv = fringe_derivative(omegas, p, t_bar);
    double dmax = 0.0;
    for (std::size_t i = 1; i + 1 < deriv.size(); ++i) dmax = std::max(dmax, std::abs(deriv[i]));
    const double floor = 1e-9 * dmax;
    std::vector<double> out(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const double d = std::abs(deriv[i]) <= floor ? 0.0 : deriv[i];
        out[i] = ramsey_uncertainty(p[i], d, t_bar, n_probes, total_time) * total_time;
    }
    return out;
}

double min_interior(const std::vector<double>& row) {
    double best = kInf;
    for (std::size_t i = 1; i + 1 < row.size(); ++i)
        if (std::isfinite(row[i])) best = std::min(best, row[i]);
    return best;
}

CrystalConfig crystal_from_spec(const CrystalSpec& spec) {
    CrystalConfig c;
    c.masses_amu = spec.masses_amu;
    c.reference_mass_amu = spec.reference_mass_amu;
    c.omega_z = kTwoPi * spec.omega_z_hz;
    c.laser_wavelength = spec.laser_wavelength_nm * 1e-9;
    c.laser_axis_projection = spec.laser_axis_projection;
    return c;
}

}  // namespace

Fig1Result compute_fig1(const ScenarioConfig& cfg) {
    cfg.validate();
    const SystemParams p = cfg.params.to_angular();
    const double t_bar = cfg.t_bar_gamma / p.gamma;
    const double cinf = c_infinity(p.lambda, p.lambda_tilde);

    Fig1Result r;
    r.n_probes.resize(cfg.n_probes_max);
    r.entangled_bound.resize(cfg.n_probes_max);
    r.ct_error.resize(cfg.n_probes_max);
    parallel_for(cfg.n_probes_max, cfg.threads, [&](int i) {
        const int n = i + 1;
        r.n_probes[i] = n;
        const auto curve = minimize_bound(p, 2.0 * n, 1.0, {1e-6 * t_bar, t_bar});
        r.entangled_bound[i] = curve.min_value;
        r.ct_error[i] = ct_min_error(n, 1.0, t_bar, cinf);
    });
    return r;
}

Fig2aResult compute_fig2a(const ScenarioConfig& cfg) {
    cfg.validate();
    const double gamma = cfg.params.gamma_angular();
    const double t_final = cfg.time.t_final_gamma / gamma;
    const int samples = cfg.time.sample_count;
    const double n_probes = cfg.estimation.n_probes;
    const double cinf =
        c_infinity(kTwoPi * cfg.params.lambda_hz, kTwoPi * cfg.params.lambda_tilde_hz);

    const SweepResult sweep = ramsey_sweep(cfg, t_final, samples);

    Fig2aResult r;
    r.n_bars = cfg.n_bar_list;
    r.gamma_t.resize(samples + 1);
    r.ct_zero_t_analytic.resize(samples + 1);
    for (int s = 0; s <= samples; ++s) {
        r.gamma_t[s] = gamma * sweep.times[s];
        r.ct_zero_t_analytic[s] =
            sweep.times[s] > 0 ? ct_min_error(n_probes, 1.0, sweep.times[s], cinf) : kInf;
    }

    r.ct_sim.assign(r.n_bars.size(), std::vector<double>(samples + 1, kInf));
    const int n_w = static_cast<int>(sweep.omegas.size());
    std::vector<double> p_row(n_w);
    for (std::size_t nb = 0; nb < r.n_bars.size(); ++nb) {
        for (int s = 1; s <= samples; ++s) {
            for (int iw = 0; iw < n_w; ++iw) p_row[iw] = sweep.p[nb][iw][s];
            const auto row = uncertainty_row(sweep.omegas, p_row, sweep.times[s], n_probes, 1.0);
            r.ct_sim[nb][s] = min_interior(row);
        }
    }

    // entangled reference: minimized bound for 2N qubits, probe coupled to
    // the damped mode without the ancilla, at the scan-center frequency
    SystemParams p_ent = cfg.params.to_angular();
    p_ent.omega = kTwoPi * 0.5 * (cfg.scan.omega_min_hz + cfg.scan.omega_max_hz);
    r.entangled_bound = minimize_bound(p_ent, 2.0 * n_probes, 1.0, {1e-6 * t_final, t_final}).min_value;
    return r;
}

Fig2bResult compute_fig2b(const ScenarioConfig& cfg) {
    cfg.validate();
    const double gamma = cfg.params.gamma_angular();
    const double t_bar = cfg.t_bar_gamma / gamma;
    const double n_probes = cfg.estimation.n_probes;

    const SweepResult sweep = ramsey_sweep(cfg, t_bar, 1);

    Fig2bResult r;
    r.t_bar = t_bar;
    r.n_bars = cfg.n_bar_list;
    const int n_w = static_cast<int>(sweep.omegas.size());
    r.omega_hz.resize(n_w);
    for (int i = 0; i < n_w; ++i) r.omega_hz[i] = sweep.omegas[i] / kTwoPi;
    r.uncertainty.assign(r.n_bars.size(), {});
    std::vector<double> p_row(n_w);
    for (std::size_t nb = 0; nb < r.n_bars.size(); ++nb) {
        for (int iw = 0; iw < n_w; ++iw) p_row[iw] = sweep.p[nb][iw][1];
        r.uncertainty[nb] = uncertainty_row(sweep.omegas, p_row, t_bar, n_probes, 1.0);
    }
    return r;
}

std::string fig1_csv(const ScenarioConfig& cfg, const Fig1Result& r) {
    std::ostringstream out;
    out << csv_preamble(cfg);
    out << "n_probes,ent_bound_2N (rad^2/s^2 * s),ct_error_N (rad^2/s^2 * s)\n";
    for (std::size_t i = 0; i < r.n_probes.size(); ++i)
        out << r.n_probes[i] << "," << num(r.entangled_bound[i]) << "," << num(r.ct_error[i])
            << "\n";
    return out.str();
}

std::string fig2a_csv(const ScenarioConfig& cfg, const Fig2aResult& r) {
    std::ostringstream out;
    out << csv_preamble(cfg);
    out << "gamma_t";
    for (double nb : r.n_bars) out << ",ct_sim_nbar_" << num(nb) << " (rad^2/s^2 * s)";
    out << ",ct_zero_T_analytic (rad^2/s^2 * s),ent_bound (rad^2/s^2 * s)\n";
    for (std::size_t s = 0; s < r.gamma_t.size(); ++s) {
        out << num(r.gamma_t[s]);
        for (std::size_t nb = 0; nb < r.n_bars.size(); ++nb) out << "," << cell(r.ct_sim[nb][s]);
        out << "," << cell(r.ct_zero_t_analytic[s]) << "," << num(r.entangled_bound) << "\n";
    }
    return out.str();
}

std::string fig2b_csv(const ScenarioConfig& cfg, const Fig2bResult& r) {
    std::ostringstream out;
    out << csv_preamble(cfg);
    out << "omega_hz";
    for (double nb : r.n_bars) out << ",d2omega_T_nbar_" << num(nb) << " (rad^2/s^2 * s)";
    out << "\n";
    for (std::size_t i = 0; i < r.omega_hz.size(); ++i) {
        out << num(r.omega_hz[i]);
        for (std::size_t nb = 0; nb < r.n_bars.size(); ++nb) out << "," << cell(r.uncertainty[nb][i]);
        out << "\n";
    }
    return out.str();
}

std::string evolve_csv(const ScenarioConfig& cfg) {
    cfg.validate();
    SystemParams p = cfg.params.to_angular();
    const bool with_ancilla = cfg.evolve_model == "ancilla";
    const LindbladModel model = with_ancilla ? build_ancilla_model(p) : build_probe_mode_model(p);
    const DensityMatrix rho0 = apply_pi_half_pulse(ramsey_ground_state(p, with_ancilla), 0);

    const double t_final = cfg.time.t_final_gamma / p.gamma;
    const double dt = cfg.time.dt_gamma > 0 ? cfg.time.dt_gamma / p.gamma : default_dt(p);

    std::ostringstream out;
    out << csv_preamble(cfg);
    out << "gamma_t,t_s,re_coherence,im_coherence,excited_population,ramsey_signal,"
           "trace_defect,hermiticity_defect,min_eigenvalue,top_fock_population\n";

    const ComplexMatrix u =
        embed((identity(2) + Complex(0, 1) * sigma_x()) / std::sqrt(2.0), 0, model.space);
    ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
    proj(1, 1) = 1.0;
    const ComplexMatrix meas = u.adjoint() * embed(proj, 0, model.space) * u;

    EvolveOptions opts;
    opts.top_level_tol = 1e-6;
    evolve_observe(model, rho0, t_final, dt, cfg.time.sample_count - 1, opts,
                   [&](int, double time, const ComplexMatrix& rho) {
                       DensityMatrix full(model.space, rho);
                       const DensityMatrix probe = partial_trace(full, 0);
                       const int d_last = model.space.factor_dims.back();
                       double top = 0.0;
                       for (int i = d_last - 1; i < model.space.dim(); i += d_last)
                           top += rho(i, i).real();
                       out << num(p.gamma * time) << "," << num(time) << ","
                           << num(probe.matrix(1, 0).real()) << "," << num(probe.matrix(1, 0).imag())
                           << "," << num(probe.matrix(1, 1).real()) << ","
                           << num((meas * rho).trace().real()) << "," << num(full.trace_defect())
                           << "," << num(full.hermiticity_defect()) << ","
                           << num(full.min_eigenvalue()) << "," << num(top) << "\n";
                   });
    return out.str();
}

std::string bound_csv(const ScenarioConfig& cfg) {
    cfg.validate();
    const SystemParams p = cfg.params.to_angular();
    const double t_bar = cfg.t_bar_gamma / p.gamma;
    const auto curve =
        minimize_bound(p, cfg.estimation.n_probes, 1.0, {1e-6 * t_bar, t_bar});
    std::ostringstream out;
    out << csv_preamble(cfg);
    out << "# minimizer: t_opt_s=" << num(curve.t_opt) << " gamma_t_opt=" << num(p.gamma * curve.t_opt)
        << " min_value=" << num(curve.min_value) << "\n";
    out << "t_s,gamma_t,bound (rad^2/s^2 * s)\n";
    for (std::size_t i = 0; i < curve.times.size(); ++i)
        out << num(curve.times[i]) << "," << num(p.gamma * curve.times[i]) << ","
            << cell(curve.values[i]) << "\n";
    return out.str();
}

std::string modes_report(const ScenarioConfig& cfg) {
    cfg.validate();
    const CrystalConfig crystal = crystal_from_spec(cfg.crystal);
    const NormalModeResult modes = normal_modes(crystal);
    const int n = static_cast<int>(crystal.masses_amu.size());
    const int nd = modes.dissipative_mode();

    std::ostringstream out;
    out << "ion crystal report (ctfreq " << kVersion << ")\n";
    out << "masses (amu):";
    for (double m : crystal.masses_amu) out << " " << num(m);
    out << "\nreference axial frequency: " << num(crystal.omega_z / kTwoPi / 1e6) << " MHz\n";
    out << "equilibrium positions (um):";
    for (double z : modes.equilibrium_positions) out << " " << num(z * 1e6);
    out << "\nmode frequencies (MHz):";
    for (double w : modes.mode_frequencies) out << " " << num(w / kTwoPi / 1e6);
    out << "\nmass-weighted amplitude matrix (rows = ions, columns = modes ascending):\n";
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) out << (k ? " " : "  ") << num(modes.mode_matrix(j, k));
        out << "\n";
    }
    out << "dissipative mode: highest frequency, index " << nd << "\n";
    out << "lamb-dicke factors (dissipative mode):";
    bool ld_warn = false;
    for (int j = 0; j < n; ++j) {
        const double eta = lamb_dicke(crystal, j, nd, modes);
        ld_warn = ld_warn || eta >= 0.3;
        out << " " << num(eta);
    }
    out << "\n";
    if (ld_warn) out << "warning: Lamb-Dicke parameter >= 0.3, expansion unreliable\n";
    out << "amplitude ratio (ion 2 / ion 1, dissipative mode): "
        << num(modes.mode_matrix(1, nd) / modes.mode_matrix(0, nd)) << "\n";

    const auto equal_rabi = effective_couplings(crystal, modes, {1.0, 1.0});
    out << "equal-illumination coupling ratio (ion 2 / ion 1): "
        << num(equal_rabi[1] / equal_rabi[0]) << "\n";

    std::vector<double> targets(cfg.crystal.target_couplings_hz.size());
    for (std::size_t j = 0; j < targets.size(); ++j)
        targets[j] = kTwoPi * cfg.crystal.target_couplings_hz[j];
    const auto rabi = required_rabi(crystal, modes, targets);
    out << "required Rabi frequencies (kHz) for couplings (";
    for (std::size_t j = 0; j < targets.size(); ++j)
        out << (j ? ", " : "") << num(cfg.crystal.target_couplings_hz[j]) << " Hz";
    out << "):";
    for (double r : rabi) out << " " << num(r / kTwoPi / 1e3);
    out << "\n";
    return out.str();
}

std::vector<std::string> run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);
    std::vector<std::string> written;

    auto write_file = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(cfg.output_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + path.string());
        out << content;
        written.push_back(path.string());
    };

    if (cfg.scenario == "fig1") {
        write_file("fig1.csv", fig1_csv(cfg, compute_fig1(cfg)));
    } else if (cfg.scenario == "fig2a") {
        write_file("fig2a.csv", fig2a_csv(cfg, compute_fig2a(cfg)));
    } else if (cfg.scenario == "fig2b") {
        write_file("fig2b.csv", fig2b_csv(cfg, compute_fig2b(cfg)));
    } else if (cfg.scenario == "evolve") {
        write_file("evolve.csv", evolve_csv(cfg));
    } else if (cfg.scenario == "bound") {
        write_file("bound.csv", bound_csv(cfg));
    } else if (cfg.scenario == "modes") {
        write_file("modes.txt", modes_report(cfg));
    }
    write_file(cfg.scenario + "_meta.json", canonical_json(cfg) + "\n");
    return written;
}

}  // namespace ctfreq
