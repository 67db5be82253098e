// figures.hpp — scenario runners that wire the model, engine and metrology
// together and emit the CSV data behind the toolkit's figures.
#pragma once

#include <string>
#include <vector>

#include "ctfreq/metrology.hpp"
#include "ctfreq/scenario.hpp"

namespace ctfreq {

// Estimation-error curves versus probe number: the minimized entangled-
// strategy bound (2N qubits) against the coherence-trapped Ramsey error (N
// probes). Values are Delta^2(omega) * T.
struct Fig1Result {
    std::vector<int> n_probes;
    std::vector<double> entangled_bound;
    std::vector<double> ct_error;
};
Fig1Result compute_fig1(const ScenarioConfig& cfg);

// Minimal Ramsey uncertainty over the omega scan versus interrogation time,
// per reservoir occupation, plus the analytic zero-temperature curve and the
// constant entangled reference. Infinите entries mark divergent points.
struct Fig2aResult {
    std::vector<double> gamma_t;                 // sampled Gamma * t
    std::vector<double> n_bars;
    std::vector<std::vector<double>> ct_sim;     // [n_bar][time], Delta^2(omega) * T
    std::vector<double> ct_zero_t_analytic;      // Eq.-(11)-style curve at the same times
    double entangled_bound = 0.0;                // minimized bound, Delta^2(omega) * T
};
Fig2aResult compute_fig2a(const ScenarioConfig& cfg);

// Ramsey uncertainty versus probe frequency at fixed interrogation time.
struct Fig2bResult {
    std::vector<double> omega_hz;                // scan grid, nu = omega/2pi
    std::vector<double> n_bars;
    std::vector<std::vector<double>> uncertainty;  // [n_bar][omega], inf = divergence
    double t_bar = 0.0;                            // s
};
Fig2bResult compute_fig2b(const ScenarioConfig& cfg);

std::string fig1_csv(const ScenarioConfig& cfg, const Fig1Result& r);
std::string fig2a_csv(const ScenarioConfig& cfg, const Fig2aResult& r);
std::string fig2b_csv(const ScenarioConfig& cfg, const Fig2bResult& r);

// Free-evolution trajectory observables for the evolve subcommand.
std::string evolve_csv(const ScenarioConfig& cfg);

// Bound curve for the bound subcommand.
std::string bound_csv(const ScenarioConfig& cfg);

// Ion-crystal report (positions, mode frequencies, amplitude matrix,
// Lamb-Dicke factors, couplings) for the modes subcommand.
std::string modes_report(const ScenarioConfig& cfg);

// Runs the configured scenario, writes its outputs (CSV plus a metadata
// JSON) under cfg.output_dir, and returns the paths written.
std::vector<std::string> run_scenario(const ScenarioConfig& cfg);

}  // namespace ctfreq
