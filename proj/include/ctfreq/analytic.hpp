// analytic.hpp — closed-form decoherence functions of the damped probe/ancilla
// model and the general single-excitation amplitude solution. These are the
// oracle layer for the numerical engine.
#pragma once

#include "ctfreq/params.hpp"

namespace ctfreq {

// Decoherence function of the basic probe-mode model,
//   f(t) = e^{-(i omega + chi/4) t} (cosh(Omega t/2) + (chi/2Omega) sinh(Omega t/2)).
// The Omega -> 0 degeneracy is handled by series evaluation.
Complex f_basic(double t, const SystemParams& p);

// Decoherence function with a resonant ancilla (coherence trapping),
//   f~(t) = e^{-i omega t} C_inf [1 + (lambda^2/lambda~^2) e^{-chi t/4}
//           (cosh(Z t/2) + (chi/2Z) sinh(Z t/2))].
// Requires omega_tilde == omega and lambda_tilde != 0; for the general
// off-resonant case use amplitude_evolution.
Complex f_ct(double t, const SystemParams& p);

// Asymptotic coherence C_inf = lambda~^2 / (lambda^2 + lambda~^2).
double c_infinity(double lambda, double lambda_tilde);

// Single-excitation amplitudes (probe, mode, ancilla).
struct AmplitudeState {
    Complex kappa;        // probe-excitation amplitude
    Complex a_amp;        // mode-excitation amplitude
    Complex kappa_tilde;  // ancilla-excitation amplitude

    double norm2() const {
        return std::norm(kappa) + std::norm(a_amp) + std::norm(kappa_tilde);
    }
};

// Solves the damped single-excitation system
//   i (kappa', a', kappa~')^T = M (kappa, a, kappa~)^T,
//   M = [[omega, lambda, 0], [lambda, omega_m - i Gamma/2, lambda~], [0, lambda~, omega~]]
// with initial condition (kappa0, 0, 0), by eigendecomposition of M (with a
// scaled-and-squared matrix-exponential fallback at exceptional points).
// Valid for arbitrary omega_tilde, unlike f_ct.
AmplitudeState amplitude_evolution(double t, const SystemParams& p, Complex kappa0);

}  // namespace ctfreq
