// metrology.hpp — precision functionals: the entangled-strategy Cramér–Rao
// bound and its minimization, the asymptotic N^{-3/2} law, Ramsey signal and
// uncertainty, the coherence-trapped minimum error and the gain ratio G(N).
#pragma once

#include <utility>
#include <vector>

#include "ctfreq/analytic.hpp"

namespace ctfreq {

struct EstimationScenario {
    double n_probes = 1;           // N
    double total_time = 1.0;       // T [s]
    double interrogation_time = 1.0;  // t or t_bar [s]

    double repetitions() const { return total_time / interrogation_time; }
    // the statistical analysis assumes T/t >> 1
    bool few_repetitions() const { return repetitions() < 10.0; }

    void validate() const {
        if (!(interrogation_time > 0) || total_time < interrogation_time)
            throw std::invalid_argument("EstimationScenario: need total_time >= interrogation_time > 0");
        if (n_probes < 1) throw std::invalid_argument("EstimationScenario: n_probes must be >= 1");
    }
};

// Bound curve over interrogation times; values are Delta^2(omega) * T.
struct BoundCurve {
    std::vector<double> times;
    std::vector<double> values;
    double t_opt = 0.0;
    double min_value = 0.0;  // Delta^2(omega) * T at t_opt
};

// Entangled-strategy lower bound at interrogation time t,
//   Delta^2 omega >= (1 + (N/4)(|f|^-2 - 1)) / (N^2 T t).
// Returns +infinity when f_mod == 0.
double crb_bound(double t, double n_probes, double total_time, double f_mod);

// Minimize the bound over t in t_window using |f| from f_basic: coarse
// log-spaced grid (>= 512 points) followed by golden-section refinement
// around the best grid point. Returned values are scaled by total_time.
BoundCurve minimize_bound(const SystemParams& p, double n_probes, double total_time,
                          std::pair<double, double> t_window, int grid_points = 512);

// Asymptotic entangled-strategy error, lambda / (T N^{3/2}).
double asymptotic_entangled_error(double n_probes, double total_time, double lambda);

// Ramsey signal P = (1 + Re f~)/2.
double ramsey_signal(Complex f_tilde);

// Frequency uncertainty Delta^2 omega = P(1-P) t / (N T (dP/domega)^2);
// +infinity when the slope vanishes.
double ramsey_uncertainty(double p_signal, double dp_domega, double t_bar, double n_probes,
                          double total_time);

// Minimum coherence-trapped error, C_inf^{-2} / (N T t_bar).
double ct_min_error(double n_probes, double total_time, double t_bar, double c_inf);

// Gain over the entangled strategy with the auxiliary-qubit count penalty,
//   G(N) = Delta^2 omega_ent(2N) / Delta^2 omega_ct(N) = lambda t_bar C_inf^2 / sqrt(8N).
double gain(double n_probes, double t_bar, double lambda, double lambda_tilde);

// Finite-difference derivative of a sampled signal on a strictly increasing
// uniform grid: central differences in the interior, one-sided second-order
// stencils at the edges. Needs at least 3 points.
std::vector<std::pair<double, double>> signal_derivative(
    const std::vector<std::pair<double, double>>& p_grid);

}  // namespace ctfreq
