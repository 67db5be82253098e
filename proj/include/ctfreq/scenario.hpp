// scenario.hpp — configuration-driven scenario descriptions for the CLI and
// figure pipelines. Config files are JSON; CLI flags override file values.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctfreq/params.hpp"

namespace ctfreq {

inline constexpr const char* kVersion = "0.1.0";

// Frequencies are entered as nu = omega/2pi in Hz (the convention in which
// the model parameters are usually quoted) and converted to angular units
// internally.
struct ParamsHz {
    double gamma_hz = 1000.0;
    double lambda_hz = 100.0;
    double lambda_tilde_hz = -290.0;
    double omega_hz = 0.0;
    std::optional<double> omega_tilde_hz;  // unset: tracks omega (resonant ancilla)
    double omega_m_hz = 0.0;
    double gamma_se_hz = 0.14;
    double n_bar = 0.0;
    int n_max = 7;

    SystemParams to_angular() const;
    double gamma_angular() const { return 2.0 * constants::pi * gamma_hz; }
};

struct ScanSpec {
    double omega_min_hz = -100.0;
    double omega_max_hz = 100.0;
    int n_points = 100;
};

struct TimeSpec {
    double t_final_gamma = 180.0;  // horizon in units of 1/Gamma
    int sample_count = 361;
    double dt_gamma = 1e-2;        // integrator step in units of 1/Gamma; <= 0: default_dt
};

// Probe-count convention: CT curves use n_probes; the entangled reference
// uses 2*n_probes qubits (one auxiliary qubit per probe).
struct EstimationSpec {
    double n_probes = 2.0;
    double total_time_s = 1.0;  // cancels in all reported Delta^2(omega)*T quantities
};

struct CrystalSpec {
    std::vector<double> masses_amu{39.9626, 39.9626, 23.9850};
    double reference_mass_amu = 39.9626;
    double omega_z_hz = 1e6;
    double laser_wavelength_nm = 729.0;
    double laser_axis_projection = 1.0;
    // coupling targets for the inverse Rabi solve in the modes report (Hz)
    std::vector<double> target_couplings_hz{100.0, -290.0};
};

struct ScenarioConfig {
    std::string scenario = "fig2a";  // fig1 | fig2a | fig2b | evolve | bound | modes
    ParamsHz params;
    ScanSpec scan;
    TimeSpec time;
    std::vector<double> n_bar_list{0.0, 0.02, 0.05};
    EstimationSpec estimation;
    CrystalSpec crystal;
    double t_bar_gamma = 120.0;  // interrogation time for fig1/fig2b/bound, units of 1/Gamma
    int n_probes_max = 12;       // fig1 column count
    std::string evolve_model = "ancilla";  // evolve scenario: "probe" or "ancilla"
    std::string output_dir = "out";
    int threads = 0;  // 0: hardware concurrency

    void validate() const;
};

// Built-in defaults for each subcommand.
ScenarioConfig default_config(const std::string& scenario);

// Defaults overlaid with the JSON file at path (the file may set any subset
// of keys). Throws ConfigError on unknown keys or malformed values.
ScenarioConfig load_config(const std::string& path, const std::string& scenario);

// Deterministic JSON dump of everything that affects the physics (execution
// fields like threads and output_dir are excluded), and its FNV-1a hash.
std::string canonical_json(const ScenarioConfig& cfg);
std::string config_hash(const ScenarioConfig& cfg);

}  // namespace ctfreq
