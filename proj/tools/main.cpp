// ctfreq — simulation and analysis CLI for coherence-trapped frequency
// estimation: Lindblad dynamics, precision bounds and the ion-chain figures.
#include <CLI11.hpp>
#include <iostream>

#include "ctfreq/figures.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    int threads = -1;
    double dt_s = 0.0;
    std::vector<double> n_bar;
    std::vector<double> omega_scan;  // min_hz, max_hz, n_points
    double n_probes = 0.0;
    double t_bar_gamma = 0.0;
    int n_probes_max = 0;
    std::string evolve_model;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override file values");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
    cmd->add_option("--dt", f.dt_s, "integrator step in seconds");
    cmd->add_option("--n-bar", f.n_bar, "reservoir occupations to simulate")->expected(-1);
    cmd->add_option("--omega-scan", f.omega_scan, "scan grid: min_hz max_hz n_points")->expected(3);
    cmd->add_option("--n-probes", f.n_probes, "probe count N for the CT strategy");
    cmd->add_option("--t-bar", f.t_bar_gamma, "interrogation time in units of 1/Gamma");
    cmd->add_option("--n-probes-max", f.n_probes_max, "largest N (fig1)");
    cmd->add_option("--model", f.evolve_model, "evolve subcommand model: probe | ancilla");
}

ctfreq::ScenarioConfig resolve(const std::string& scenario, const CommonFlags& f) {
    ctfreq::ScenarioConfig cfg = f.config_path.empty()
                                     ? ctfreq::default_config(scenario)
                                     : ctfreq::load_config(f.config_path, scenario);
    if (!f.out_dir.empty()) cfg.output_dir = f.out_dir;
    if (f.threads >= 0) cfg.threads = f.threads;
    if (f.dt_s > 0) cfg.time.dt_gamma = f.dt_s * cfg.params.gamma_angular();
    if (!f.n_bar.empty()) cfg.n_bar_list = f.n_bar;
    if (f.omega_scan.size() == 3) {
        cfg.scan.omega_min_hz = f.omega_scan[0];
        cfg.scan.omega_max_hz = f.omega_scan[1];
        cfg.scan.n_points = static_cast<int>(f.omega_scan[2]);
    }
    if (f.n_probes > 0) cfg.estimation.n_probes = f.n_probes;
    if (f.t_bar_gamma > 0) cfg.t_bar_gamma = f.t_bar_gamma;
    if (f.n_probes_max > 0) cfg.n_probes_max = f.n_probes_max;
    if (!f.evolve_model.empty()) cfg.evolve_model = f.evolve_model;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence-trapped frequency estimation toolkit"};
    app.require_subcommand(1);

    const char* scenarios[] = {"fig1", "fig2a", "fig2b", "evolve", "bound", "modes"};
    const char* blurbs[] = {
        "estimation-error curves versus probe number",
        "minimal Ramsey uncertainty versus interrogation time",
        "Ramsey uncertainty versus probe frequency at fixed time",
        "free-evolution trajectory observables",
        "entangled-strategy bound curve and its minimizer",
        "ion-crystal normal modes, Lamb-Dicke factors and couplings"};
    CommonFlags flags[6];
    for (int i = 0; i < 6; ++i) add_common(app.add_subcommand(scenarios[i], blurbs[i]), flags[i]);

    try {
        app.parse(argc, argv);
        for (int i = 0; i < 6; ++i) {
            if (app.get_subcommand(scenarios[i])->parsed()) {
                const auto cfg = resolve(scenarios[i], flags[i]);
                const auto written = ctfreq::run_scenario(cfg);
                if (cfg.scenario == "modes") std::cout << ctfreq::modes_report(cfg);
                for (const auto& path : written) std::cout << "wrote " << path << "\n";
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ctfreq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ctfreq::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const ctfreq::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
