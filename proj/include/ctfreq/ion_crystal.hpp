// ion_crystal.hpp — equilibrium positions, axial normal modes, Lamb-Dicke
// factors and effective spin-mode couplings of a mixed-species linear chain.
#pragma once

#include <vector>

#include "ctfreq/types.hpp"

namespace ctfreq {

struct CrystalConfig {
    std::vector<double> masses_amu;      // one per ion, in order along the axis
    double reference_mass_amu = 0.0;     // species defining the trap frequency
    double omega_z = 0.0;                // single-ion axial frequency of the reference mass [rad/s]
    double laser_wavelength = 729e-9;    // m
    double laser_axis_projection = 1.0;  // k_z = projection * 2 pi / wavelength

    void validate() const;
};

struct NormalModeResult {
    std::vector<double> equilibrium_positions;  // m, signed along z
    std::vector<double> mode_frequencies;       // rad/s, ascending
    Eigen::MatrixXd mode_matrix;                // mass-weighted amplitudes B~_{jn}, orthonormal columns

    int dissipative_mode() const { return static_cast<int>(mode_frequencies.size()) - 1; }
};

// Characteristic length l with l^3 = q^2 / (4 pi eps0 m_ref omega_z^2).
double length_scale(const CrystalConfig& config);

// Stationary points of the harmonic-plus-Coulomb axial potential, solved by
// damped Newton iteration from an equally spaced start. The trap curvature
// is species-independent, so the positions depend only on the ion count.
std::vector<double> equilibrium_positions(const CrystalConfig& config);

// Eigendecomposition of the mass-weighted Hessian at equilibrium. The
// highest-frequency mode (last column) is the designated dissipative mode.
NormalModeResult normal_modes(const CrystalConfig& config);

// eta_{jn} = k_z sqrt(hbar / (2 m_j omega_n)).
double lamb_dicke(const CrystalConfig& config, int ion, int mode, const NormalModeResult& modes);

// Complex couplings lambda_j = i B~_{j3} eta_{j3} Omega_j e^{i(k_z z_j + phi_j)} / 2
// of the effective spin-mode Hamiltonian (dissipative mode).
std::vector<Complex> spin_mode_coupling(const CrystalConfig& config, const NormalModeResult& modes,
                                        const std::vector<double>& rabi,
                                        const std::vector<double>& phases);

// Real-coupling convention for the main-text model: |lambda_j| signed by the
// dissipative-mode amplitude pattern, normalized so the first ion's coupling
// is positive.
std::vector<double> effective_couplings(const CrystalConfig& config, const NormalModeResult& modes,
                                        const std::vector<double>& rabi);

// Inverse of effective_couplings for given coupling targets (rad/s).
std::vector<double> required_rabi(const CrystalConfig& config, const NormalModeResult& modes,
                                  const std::vector<double>& target_couplings);

}  // namespace ctfreq
