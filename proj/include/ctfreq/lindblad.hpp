// lindblad.hpp — GKSL generators of the probe/ancilla models and a fixed-step
// RK4 integrator with trace/Hermiticity/positivity surveillance.
#pragma once

#include <functional>
#include <vector>

#include "ctfreq/ops.hpp"
#include "ctfreq/params.hpp"

namespace ctfreq {

// A Hamiltonian plus (rate, jump operator) pairs; the integrator's sole
// input besides the state. Rates are >= 0 so the generator is GKSL.
struct LindbladModel {
    CompositeSpace space;
    ComplexMatrix hamiltonian;
    std::vector<std::pair<double, ComplexMatrix>> jumps;

    void validate() const;
};

// H = (omega/2) sigma_z + omega_m a†a + lambda (sigma- a† + sigma+ a) on the
// probe ⊗ mode space, with the laser-cooling dissipator (rates Gamma(n̄+1)
// on a and Gamma n̄ on a†) and spontaneous emission on the probe.
LindbladModel build_probe_mode_model(const SystemParams& p);

// Full probe ⊗ ancilla ⊗ mode model: both qubit-mode couplings, the
// laser-cooling dissipator and spontaneous emission on both qubits.
LindbladModel build_ancilla_model(const SystemParams& p);

// Default integrator step, 1e-3 over the largest rate in the model.
double default_dt(const SystemParams& p);

struct EvolveOptions {
    double trace_tol = 1e-6;       // abort when |tr rho - 1| exceeds this
    double hermiticity_tol = 1e-6;
    double positivity_tol = 1e-6;  // abort when min eigenvalue < -tol
    // Truncation certificate: population of the top level of the last
    // tensor factor must stay below this. <= 0 disables the check.
    double top_level_tol = 0.0;
    bool check_positivity = true;
};

struct SamplePoint {
    double time;
    DensityMatrix state;
};

// Classic fixed-step RK4 on the GKSL right-hand side. States are emitted at
// sample_count+1 equally spaced times including t=0 and t_final; dt is
// rounded down so that an integer number of steps lands on each sample.
std::vector<SamplePoint> evolve(const LindbladModel& model, const DensityMatrix& rho0,
                                double t_final, double dt, int sample_count = 100,
                                const EvolveOptions& opts = {});

// Streaming variant: the observer receives (sample index, time, rho).
void evolve_observe(const LindbladModel& model, const DensityMatrix& rho0, double t_final,
                    double dt, int sample_count, const EvolveOptions& opts,
                    const std::function<void(int, double, const ComplexMatrix&)>& observer);

}  // namespace ctfreq
