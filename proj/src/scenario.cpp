#include "ctfreq/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ctfreq {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * constants::pi;

json params_to_json(const ParamsHz& p) {
    json j{{"gamma_hz", p.gamma_hz},
           {"lambda_hz", p.lambda_hz},
           {"lambda_tilde_hz", p.lambda_tilde_hz},
           {"omega_hz", p.omega_hz},
           {"omega_m_hz", p.omega_m_hz},
           {"gamma_se_hz", p.gamma_se_hz},
           {"n_bar", p.n_bar},
           {"n_max", p.n_max}};
    if (p.omega_tilde_hz) j["omega_tilde_hz"] = *p.omega_tilde_hz;
    return j;
}

template <typename T>
void get_if_present(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void merge_params(const json& j, ParamsHz& p) {
    get_if_present(j, "gamma_hz", p.gamma_hz);
    get_if_present(j, "lambda_hz", p.lambda_hz);
    get_if_present(j, "lambda_tilde_hz", p.lambda_tilde_hz);
    get_if_present(j, "omega_hz", p.omega_hz);
    get_if_present(j, "omega_m_hz", p.omega_m_hz);
    get_if_present(j, "gamma_se_hz", p.gamma_se_hz);
    get_if_present(j, "n_bar", p.n_bar);
    get_if_present(j, "n_max", p.n_max);
    if (j.contains("omega_tilde_hz")) p.omega_tilde_hz = j.at("omega_tilde_hz").get<double>();
    for (auto& [key, _] : j.items()) {
        static const char* known[] = {"gamma_hz", "lambda_hz", "lambda_tilde_hz", "omega_hz",
                                      "omega_tilde_hz", "omega_m_hz", "gamma_se_hz", "n_bar", "n_max"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("config: unknown key params." + key);
    }
}

}  // namespace

SystemParams ParamsHz::to_angular() const {
    SystemParams p;
    p.gamma = kTwoPi * gamma_hz;
    p.lambda = kTwoPi * lambda_hz;
    p.lambda_tilde = kTwoPi * lambda_tilde_hz;
    p.omega = kTwoPi * omega_hz;
    p.omega_tilde = kTwoPi * (omega_tilde_hz ? *omega_tilde_hz : omega_hz);
    p.omega_m = kTwoPi * omega_m_hz;
    p.gamma_se = kTwoPi * gamma_se_hz;
    p.n_bar = n_bar;
    p.n_max = n_max;
    p.validate();
    return p;
}

void ScenarioConfig::validate() const {
    static const char* scenarios[] = {"fig1", "fig2a", "fig2b", "evolve", "bound", "modes"};
    bool ok = false;
    for (const char* s : scenarios) ok = ok || scenario == s;
    if (!ok) throw ConfigError("config: unknown scenario '" + scenario + "'");
    if (!(params.gamma_hz > 0)) throw ConfigError("config: gamma_hz must be positive");
    if (params.gamma_se_hz < 0) throw ConfigError("config: gamma_se_hz must be >= 0");
    if (params.n_max < 1) throw ConfigError("config: n_max must be >= 1");
    if (!(scan.omega_max_hz > scan.omega_min_hz))
        throw ConfigError("config: scan bounds must be strictly increasing");
    if (scan.n_points < 3) throw ConfigError("config: scan needs at least 3 points");
    if (time.sample_count < 2) throw ConfigError("config: sample_count must be >= 2");
    if (!(time.t_final_gamma > 0)) throw ConfigError("config: t_final_gamma must be positive");
    if (!(t_bar_gamma > 0)) throw ConfigError("config: t_bar_gamma must be positive");
    if (!(estimation.n_probes >= 1)) throw ConfigError("config: n_probes must be >= 1");
    if (n_probes_max < 1) throw ConfigError("config: n_probes_max must be >= 1");
    for (double nb : n_bar_list)
        if (nb < 0) throw ConfigError("config: n_bar_list entries must be >= 0");
    if (evolve_model != "probe" && evolve_model != "ancilla")
        throw ConfigError("config: evolve_model must be 'probe' or 'ancilla'");
}

ScenarioConfig default_config(const std::string& scenario) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    if (scenario == "fig1") {
        // Gamma sets the unit; Delta = 0.05 Gamma, lambda = 0.3 Gamma, lambda~ = 0.6 Gamma
        cfg.params.lambda_hz = 300.0;
        cfg.params.lambda_tilde_hz = 600.0;
        cfg.params.omega_hz = 50.0;
        cfg.params.gamma_se_hz = 0.0;
        cfg.t_bar_gamma = 30.0;
        cfg.estimation.n_probes = 1.0;
        cfg.n_bar_list = {0.0};
    } else if (scenario == "fig2a") {
        cfg.time = TimeSpec{180.0, 360, 1e-2};  // 361 points, one per half unit of Gamma t
        cfg.scan = ScanSpec{-100.0, 100.0, 100};
        cfg.t_bar_gamma = 120.0;
    } else if (scenario == "fig2b") {
        cfg.time = TimeSpec{120.0, 2, 1e-2};
        // 101 points so omega = 0, where the signal slope vanishes exactly,
        // lies on the grid
        cfg.scan = ScanSpec{-100.0, 100.0, 101};
        cfg.t_bar_gamma = 120.0;
    } else if (scenario == "evolve") {
        cfg.time = TimeSpec{30.0, 300, 0.0};  // dt from the default-step rule
    } else if (scenario == "bound") {
        cfg.params.lambda_hz = 300.0;
        cfg.params.lambda_tilde_hz = 600.0;
        cfg.params.omega_hz = 50.0;
        cfg.params.gamma_se_hz = 0.0;
        cfg.t_bar_gamma = 30.0;
        cfg.estimation.n_probes = 2.0;
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path, const std::string& scenario) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config: parse failure in '" + path + "': " + e.what());
    }

    static const char* top_keys[] = {"scenario",  "params",        "scan",        "time",
                                     "estimation", "crystal",       "n_bar_list",  "t_bar_gamma",
                                     "n_probes_max", "evolve_model", "output_dir", "threads"};
    for (auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : top_keys) ok = ok || key == k;
        if (!ok) throw ConfigError("config: unknown key '" + key + "'");
    }

    std::string effective = scenario;
    if (j.contains("scenario")) {
        const std::string file_scenario = j.at("scenario").get<std::string>();
        if (!scenario.empty() && file_scenario != scenario)
            throw ConfigError("config: file scenario '" + file_scenario +
                              "' does not match the requested subcommand '" + scenario + "'");
        effective = file_scenario;
    }
    ScenarioConfig cfg = default_config(effective);

    try {
        if (j.contains("params")) merge_params(j.at("params"), cfg.params);
        if (j.contains("scan")) {
            const json& s = j.at("scan");
            get_if_present(s, "omega_min_hz", cfg.scan.omega_min_hz);
            get_if_present(s, "omega_max_hz", cfg.scan.omega_max_hz);
            get_if_present(s, "n_points", cfg.scan.n_points);
        }
        if (j.contains("time")) {
            const json& t = j.at("time");
            get_if_present(t, "t_final_gamma", cfg.time.t_final_gamma);
            get_if_present(t, "sample_count", cfg.time.sample_count);
            get_if_present(t, "dt_gamma", cfg.time.dt_gamma);
        }
        if (j.contains("estimation")) {
            const json& e = j.at("estimation");
            get_if_present(e, "n_probes", cfg.estimation.n_probes);
            get_if_present(e, "total_time_s", cfg.estimation.total_time_s);
        }
        if (j.contains("crystal")) {
            const json& c = j.at("crystal");
            get_if_present(c, "masses_amu", cfg.crystal.masses_amu);
            get_if_present(c, "reference_mass_amu", cfg.crystal.reference_mass_amu);
            get_if_present(c, "omega_z_hz", cfg.crystal.omega_z_hz);
            get_if_present(c, "laser_wavelength_nm", cfg.crystal.laser_wavelength_nm);
            get_if_present(c, "laser_axis_projection", cfg.crystal.laser_axis_projection);
            get_if_present(c, "target_couplings_hz", cfg.crystal.target_couplings_hz);
        }
        get_if_present(j, "n_bar_list", cfg.n_bar_list);
        get_if_present(j, "t_bar_gamma", cfg.t_bar_gamma);
        get_if_present(j, "n_probes_max", cfg.n_probes_max);
        get_if_present(j, "evolve_model", cfg.evolve_model);
        get_if_present(j, "output_dir", cfg.output_dir);
        get_if_present(j, "threads", cfg.threads);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: malformed value: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string canonical_json(const ScenarioConfig& cfg) {
    json j;
    j["scenario"] = cfg.scenario;
    j["version"] = kVersion;
    j["params"] = params_to_json(cfg.params);
    j["scan"] = {{"omega_min_hz", cfg.scan.omega_min_hz},
                 {"omega_max_hz", cfg.scan.omega_max_hz},
                 {"n_points", cfg.scan.n_points}};
    j["time"] = {{"t_final_gamma", cfg.time.t_final_gamma},
                 {"sample_count", cfg.time.sample_count},
                 {"dt_gamma", cfg.time.dt_gamma}};
    j["n_bar_list"] = cfg.n_bar_list;
    j["estimation"] = {{"n_probes", cfg.estimation.n_probes},
                       {"total_time_s", cfg.estimation.total_time_s}};
    j["crystal"] = {{"masses_amu", cfg.crystal.masses_amu},
                    {"reference_mass_amu", cfg.crystal.reference_mass_amu},
                    {"omega_z_hz", cfg.crystal.omega_z_hz},
                    {"laser_wavelength_nm", cfg.crystal.laser_wavelength_nm},
                    {"laser_axis_projection", cfg.crystal.laser_axis_projection},
                    {"target_couplings_hz", cfg.crystal.target_couplings_hz}};
    j["t_bar_gamma"] = cfg.t_bar_gamma;
    j["n_probes_max"] = cfg.n_probes_max;
    j["evolve_model"] = cfg.evolve_model;
    return j.dump();
}

std::string config_hash(const ScenarioConfig& cfg) {
    // FNV-1a 64-bit over the canonical dump
    const std::string s = canonical_json(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace ctfreq
