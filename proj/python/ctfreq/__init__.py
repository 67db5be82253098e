"""Coherence-trapped frequency estimation toolkit.

Python bindings for the C++ core: Lindblad dynamics of probe qubits coupled
to a damped mode, closed-form decoherence functions, Ramsey/Cramer-Rao
precision functionals and the mixed-species ion-chain mode analysis.
"""

from ._core import (
    ConfigError,
    ConvergenceError,
    CrystalConfig,
    NumericalError,
    SystemParams,
    __version__,
    amplitude_evolution,
    asymptotic_entangled_error,
    boson_ops,
    c_infinity,
    crb_bound,
    ct_min_error,
    effective_couplings,
    equilibrium_positions,
    evolve_probe_coherence,
    f_basic,
    f_ct,
    gain,
    kron,
    lamb_dicke,
    minimize_bound,
    normal_modes,
    partial_trace,
    qubit_superposition_state,
    ramsey_signal,
    ramsey_uncertainty,
    required_rabi,
    signal_derivative,
    simulate_ramsey_signal,
    thermal_state,
)

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "CrystalConfig",
    "NumericalError",
    "SystemParams",
    "__version__",
    "amplitude_evolution",
    "asymptotic_entangled_error",
    "boson_ops",
    "c_infinity",
    "crb_bound",
    "ct_min_error",
    "effective_couplings",
    "equilibrium_positions",
    "evolve_probe_coherence",
    "f_basic",
    "f_ct",
    "gain",
    "kron",
    "lamb_dicke",
    "minimize_bound",
    "normal_modes",
    "partial_trace",
    "qubit_superposition_state",
    "ramsey_signal",
    "ramsey_uncertainty",
    "required_rabi",
    "signal_derivative",
    "simulate_ramsey_signal",
    "thermal_state",
]
