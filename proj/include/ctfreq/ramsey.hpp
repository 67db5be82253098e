// ramsey.hpp — Ramsey pulse application and the simulated interferometry
// signal of the probe/ancilla/mode system.
#pragma once

#include <vector>

#include "ctfreq/lindblad.hpp"

namespace ctfreq {

// Instantaneous pi/2 rotation exp(+i (pi/4) sigma_x) on one qubit factor;
// takes |0> to (|0> + i|1>)/sqrt(2). Exact unitary, trace and positivity
// preserving.
DensityMatrix apply_pi_half_pulse(const DensityMatrix& rho, int target = 0);

// Product state |0><0|_probe ⊗ [|0><0|_ancilla ⊗] thermal(n_bar) before the
// first pulse.
DensityMatrix ramsey_ground_state(const SystemParams& p, bool with_ancilla);

struct RamseySample {
    double time;
    double signal;  // excited-state probability after the closing pulse
};

struct RamseyRunOptions {
    double dt = 0.0;            // integrator step; <= 0 means default_dt(p)
    int sample_count = 100;
    double top_level_tol = 1e-6;  // truncation certificate on the mode
};

// Full Ramsey cycle on the probe/ancilla/mode model: first pulse on the
// probe, free evolution under the laser-cooling + spontaneous-emission
// dissipators, and at every sample time the excited-state probability that
// a closing pulse would produce. The closing pulse is folded into the
// measurement operator (pulses are instantaneous unitaries, so this equals
// pulsing a copy of the state at each sample).
std::vector<RamseySample> simulate_ramsey_signal(const SystemParams& p, double t_final,
                                                 const RamseyRunOptions& opts = {});

}  // namespace ctfreq
