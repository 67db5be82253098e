#include "ctfreq/analytic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ctfreq {

namespace {

// sinh(w)/w, series below |w| = 1e-4 where the direct quotient loses digits
Complex sinhc(Complex w) {
    if (std::abs(w) < 1e-4) {
        const Complex w2 = w * w;
        return 1.0 + w2 / 6.0 * (1.0 + w2 / 20.0 * (1.0 + w2 / 42.0));
    }
    return std::sinh(w) / w;
}

// cosh(theta t/2) + (chi/2 theta) sinh(theta t/2), written as
// cosh(w) + (chi t/4) sinhc(w) so the theta -> 0 limit is regular.
Complex decay_bracket(Complex chi_val, Complex theta, double t) {
    const Complex w = theta * t / 2.0;
    return std::cosh(w) + (chi_val * t / 4.0) * sinhc(w);
}

// plain scaling-and-squaring Taylor exponential; only used for tiny matrices
Eigen::MatrixXcd expm_small(const Eigen::MatrixXcd& m) {
    const double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    double scale = 1.0;
    while (nrm * scale > 0.5) {
        scale /= 2.0;
        ++s;
    }
    const Eigen::MatrixXcd a = m * scale;
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 24; ++k) {
        term = (term * a) / static_cast<double>(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

}  // namespace

Complex f_basic(double t, const SystemParams& p) {
    if (t < 0) throw std::invalid_argument("f_basic: t must be >= 0");
    const Complex c = chi(p);
    const Complex expo = -(Complex(0.0, p.omega) + c / 4.0) * t;
    return std::exp(expo) * decay_bracket(c, big_omega(p), t);
}

Complex f_ct(double t, const SystemParams& p) {
    if (t < 0) throw std::invalid_argument("f_ct: t must be >= 0");
    const double scale = std::max({1.0, std::abs(p.omega), std::abs(p.omega_tilde)});
    if (std::abs(p.omega_tilde - p.omega) > 1e-9 * scale)
        throw std::invalid_argument("f_ct: requires the resonant condition omega_tilde == omega");
    if (p.lambda_tilde == 0.0)
        throw std::invalid_argument("f_ct: lambda_tilde must be nonzero; use amplitude_evolution");
    const Complex c = chi(p);
    const double ratio2 = (p.lambda * p.lambda) / (p.lambda_tilde * p.lambda_tilde);
    const double cinf = c_infinity(p.lambda, p.lambda_tilde);
    const Complex transient = ratio2 * std::exp(-c * t / 4.0) * decay_bracket(c, big_z(p), t);
    return std::exp(Complex(0.0, -p.omega * t)) * cinf * (1.0 + transient);
}

double c_infinity(double lambda, double lambda_tilde) {
    const double l2 = lambda * lambda, lt2 = lambda_tilde * lambda_tilde;
    if (l2 + lt2 == 0.0)
        throw std::invalid_argument("c_infinity: lambda and lambda_tilde cannot both vanish");
    return lt2 / (l2 + lt2);
}

AmplitudeState amplitude_evolution(double t, const SystemParams& p, Complex kappa0) {
    if (t < 0) throw std::invalid_argument("amplitude_evolution: t must be >= 0");
    Eigen::Matrix3cd m;
    m << Complex(p.omega, 0), Complex(p.lambda, 0), Complex(0, 0),
         Complex(p.lambda, 0), Complex(p.omega_m, -p.gamma / 2.0), Complex(p.lambda_tilde, 0),
         Complex(0, 0), Complex(p.lambda_tilde, 0), Complex(p.omega_tilde, 0);

    const Eigen::Vector3cd v0(kappa0, Complex(0, 0), Complex(0, 0));
    Eigen::Vector3cd v;

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m);
    bool ok = es.info() == Eigen::Success;
    if (ok) {
        // reject a near-defective eigenbasis (exceptional points)
        Eigen::JacobiSVD<Eigen::Matrix3cd> svd(es.eigenvectors());
        ok = svd.singularValues()(2) > 1e-8 * svd.singularValues()(0);
    }
    if (ok) {
        const Eigen::Vector3cd c = es.eigenvectors().fullPivLu().solve(v0);
        Eigen::Vector3cd phases;
        for (int k = 0; k < 3; ++k)
            phases(k) = std::exp(Complex(0, -1) * es.eigenvalues()(k) * t);
        v = es.eigenvectors() * phases.cwiseProduct(c);
    } else {
        v = expm_small(Complex(0, -1) * m * t) * v0;
    }

    AmplitudeState out{v(0), v(1), v(2)};
    if (out.norm2() > std::norm(kappa0) + 1e-10)
        throw NumericalError("amplitude_evolution: excitation-sector norm grew beyond tolerance");
    return out;
}

}  // namespace ctfreq
