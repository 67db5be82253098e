#include "ctfreq/ion_crystal.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace ctfreq {

namespace {

// dimensionless gradient and Hessian of V = 1/2 sum u^2 + sum_{i<j} 1/|u_i - u_j|
Eigen::VectorXd coulomb_gradient(const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    Eigen::VectorXd g = u;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double d = u(j) - u(i);
            g(j) -= (d > 0 ? 1.0 : -1.0) / (d * d);
        }
    return g;
}

Eigen::MatrixXd coulomb_hessian(const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double d = std::abs(u(j) - u(i));
            h(j, j) += 2.0 / (d * d * d);
            h(j, i) = -2.0 / (d * d * d);
        }
    return h;
}

}  // namespace

void CrystalConfig::validate() const {
    if (masses_amu.size() < 2) throw std::invalid_argument("CrystalConfig: need at least 2 ions");
    for (double m : masses_amu)
        if (!(m > 0)) throw std::invalid_argument("CrystalConfig: masses must be positive");
    if (!(reference_mass_amu > 0))
        throw std::invalid_argument("CrystalConfig: reference mass must be positive");
    if (!(omega_z > 0)) throw std::invalid_argument("CrystalConfig: omega_z must be positive");
    if (!(laser_wavelength > 0))
        throw std::invalid_argument("CrystalConfig: wavelength must be positive");
    if (laser_axis_projection < 0 || laser_axis_projection > 1)
        throw std::invalid_argument("CrystalConfig: axis projection must lie in [0, 1]");
}

double length_scale(const CrystalConfig& config) {
    config.validate();
    const double k_trap = config.reference_mass_amu * constants::amu * config.omega_z * config.omega_z;
    const double q2 = constants::elementary_charge * constants::elementary_charge;
    return std::cbrt(q2 / (4.0 * constants::pi * constants::epsilon0 * k_trap));
}

std::vector<double> equilibrium_positions(const CrystalConfig& config) {
    config.validate();
    const int n = static_cast<int>(config.masses_amu.size());
    Eigen::VectorXd u(n);
    for (int j = 0; j < n; ++j) u(j) = 1.1 * (j - 0.5 * (n - 1));

    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const Eigen::VectorXd g = coulomb_gradient(u);
        if (g.cwiseAbs().maxCoeff() < 1e-13) {
            converged = true;
            break;
        }
        const Eigen::VectorXd step = coulomb_hessian(u).ldlt().solve(g);
        // damped update: halve until the residual actually shrinks
        double alpha = 1.0;
        const double r0 = g.norm();
        for (int k = 0; k < 30; ++k) {
            Eigen::VectorXd trial = u - alpha * step;
            if (coulomb_gradient(trial).norm() < r0) {
                u = trial;
                break;
            }
            alpha /= 2.0;
        }
    }
    if (!converged) throw ConvergenceError("equilibrium_positions: Newton iteration did not converge");

    const double ell = length_scale(config);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = u(j) * ell;
    return out;
}

NormalModeResult normal_modes(const CrystalConfig& config) {
    NormalModeResult result;
    result.equilibrium_positions = equilibrium_positions(config);
    const int n = static_cast<int>(config.masses_amu.size());
    const double ell = length_scale(config);

    Eigen::VectorXd u(n);
    for (int j = 0; j < n; ++j) u(j) = result.equilibrium_positions[j] / ell;

    // mass-weighted dimensionless Hessian; eigenvalues are (omega_n/omega_z)^2
    Eigen::MatrixXd h = coulomb_hessian(u);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            h(j, i) /= std::sqrt(config.masses_amu[j] * config.masses_amu[i] /
                                 (config.reference_mass_amu * config.reference_mass_amu));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("normal_modes: eigendecomposition failed");
    result.mode_frequencies.resize(n);
    for (int k = 0; k < n; ++k) {
        const double ev = es.eigenvalues()(k);
        if (ev <= 0) throw NumericalError("normal_modes: unstable configuration (negative eigenvalue)");
        result.mode_frequencies[k] = config.omega_z * std::sqrt(ev);
    }
    result.mode_matrix = es.eigenvectors();
    // deterministic sign: largest-magnitude amplitude of each mode positive
    for (int k = 0; k < n; ++k) {
        int jmax = 0;
        for (int j = 1; j < n; ++j)
            if (std::abs(result.mode_matrix(j, k)) > std::abs(result.mode_matrix(jmax, k))) jmax = j;
        if (result.mode_matrix(jmax, k) < 0) result.mode_matrix.col(k) *= -1.0;
    }
    return result;
}

double lamb_dicke(const CrystalConfig& config, int ion, int mode, const NormalModeResult& modes) {
    const int n = static_cast<int>(config.masses_amu.size());
    if (ion < 0 || ion >= n) throw std::invalid_argument("lamb_dicke: ion index out of range");
    if (mode < 0 || mode >= static_cast<int>(modes.mode_frequencies.size()))
        throw std::invalid_argument("lamb_dicke: mode index out of range");
    const double kz = config.laser_axis_projection * 2.0 * constants::pi / config.laser_wavelength;
    const double m = config.masses_amu[ion] * constants::amu;
    return kz * std::sqrt(constants::hbar / (2.0 * m * modes.mode_frequencies[mode]));
}

std::vector<Complex> spin_mode_coupling(const CrystalConfig& config, const NormalModeResult& modes,
                                        const std::vector<double>& rabi,
                                        const std::vector<double>& phases) {
    if (rabi.size() != phases.size())
        throw std::invalid_argument("spin_mode_coupling: need one phase per Rabi frequency");
    if (rabi.size() > config.masses_amu.size())
        throw std::invalid_argument("spin_mode_coupling: more Rabi frequencies than ions");
    const int nd = modes.dissipative_mode();
    const double kz = config.laser_axis_projection * 2.0 * constants::pi / config.laser_wavelength;
    std::vector<Complex> out(rabi.size());
    for (std::size_t j = 0; j < rabi.size(); ++j) {
        const double eta = lamb_dicke(config, static_cast<int>(j), nd, modes);
        const double b = modes.mode_matrix(static_cast<Eigen::Index>(j), nd);
        const Complex phase = std::exp(Complex(0, kz * modes.equilibrium_positions[j] + phases[j]));
        out[j] = Complex(0, 1) * b * eta * rabi[j] * phase / 2.0;
    }
    return out;
}

std::vector<double> effective_couplings(const CrystalConfig& config, const NormalModeResult& modes,
                                        const std::vector<double>& rabi) {
    const int nd = modes.dissipative_mode();
    std::vector<double> out(rabi.size());
    double first_sign = 1.0;
    for (std::size_t j = 0; j < rabi.size(); ++j) {
        const double eta = lamb_dicke(config, static_cast<int>(j), nd, modes);
        const double b = modes.mode_matrix(static_cast<Eigen::Index>(j), nd);
        out[j] = 0.5 * b * eta * rabi[j];
        if (j == 0) first_sign = (out[0] >= 0) ? 1.0 : -1.0;
        out[j] *= first_sign;
    }
    return out;
}

std::vector<double> required_rabi(const CrystalConfig& config, const NormalModeResult& modes,
                                  const std::vector<double>& target_couplings) {
    const int nd = modes.dissipative_mode();
    std::vector<double> out(target_couplings.size());
    for (std::size_t j = 0; j < target_couplings.size(); ++j) {
        const double eta = lamb_dicke(config, static_cast<int>(j), nd, modes);
        const double b = modes.mode_matrix(static_cast<Eigen::Index>(j), nd);
        if (b == 0.0) throw std::invalid_argument("required_rabi: ion does not couple to the mode");
        out[j] = 2.0 * std::abs(target_couplings[j]) / (std::abs(b) * eta);
    }
    return out;
}

}  // namespace ctfreq
