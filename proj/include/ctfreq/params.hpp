// params.hpp — physical rates and frequencies of the probe/ancilla/mode model.
#pragma once

#include <cmath>
#include <complex>

#include "ctfreq/types.hpp"

namespace ctfreq {

// All frequencies and rates are angular (rad/s). lambda_tilde may be
// negative; gamma, gamma_se and n_bar must be non-negative.
struct SystemParams {
    double omega = 0.0;         // probe frequency
    double omega_tilde = 0.0;   // ancilla frequency
    double omega_m = 0.0;       // mode frequency
    double lambda = 0.0;        // probe-mode coupling
    double lambda_tilde = 0.0;  // ancilla-mode coupling
    double gamma = 0.0;         // mode damping rate
    double gamma_se = 0.0;      // qubit spontaneous-emission rate
    double n_bar = 0.0;         // reservoir mean occupation
    int n_max = 7;              // Fock truncation

    void validate() const {
        if (gamma < 0) throw std::invalid_argument("SystemParams: gamma must be >= 0");
        if (gamma_se < 0) throw std::invalid_argument("SystemParams: gamma_se must be >= 0");
        if (n_bar < 0) throw std::invalid_argument("SystemParams: n_bar must be >= 0");
        if (n_max < 1) throw std::invalid_argument("SystemParams: n_max must be >= 1");
    }
};

// Derived quantities, computed on demand (never stored).
inline double detuning(const SystemParams& p) { return p.omega - p.omega_m; }

// chi = Gamma - 2i*Delta
inline Complex chi(const SystemParams& p) { return {p.gamma, -2.0 * detuning(p)}; }

// Omega = sqrt(chi^2/4 - 4 lambda^2); principal branch (observables are
// branch-invariant since the decay bracket is even in Omega).
inline Complex big_omega(const SystemParams& p) {
    const Complex c = chi(p);
    return std::sqrt(c * c / 4.0 - 4.0 * p.lambda * p.lambda);
}

// Z = sqrt(Omega^2 - 4 lambda_tilde^2)
inline Complex big_z(const SystemParams& p) {
    const Complex c = chi(p);
    return std::sqrt(c * c / 4.0 - 4.0 * p.lambda * p.lambda -
                     4.0 * p.lambda_tilde * p.lambda_tilde);
}

}  // namespace ctfreq
