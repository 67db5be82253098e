#include "ctfreq/ops.hpp"

#include <cmath>

namespace ctfreq {

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << -1, 0, 0, 1;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

std::pair<ComplexMatrix, ComplexMatrix> boson_ops(int n_max) {
    if (n_max < 1) throw std::invalid_argument("boson_ops: n_max must be >= 1");
    const int d = n_max + 1;
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {a, a.adjoint()};
}

DensityMatrix thermal_state(double n_bar, int n_max) {
    if (n_bar < 0) throw std::invalid_argument("thermal_state: n_bar must be >= 0");
    if (n_max < 1) throw std::invalid_argument("thermal_state: n_max must be >= 1");
    const int d = n_max + 1;
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    if (n_bar == 0.0) {
        rho(0, 0) = 1.0;
    } else {
        const double r = n_bar / (n_bar + 1.0);
        double norm = 0.0, w = 1.0;
        for (int n = 0; n < d; ++n, w *= r) norm += w;
        w = 1.0;
        for (int n = 0; n < d; ++n, w *= r) rho(n, n) = w / norm;
    }
    return DensityMatrix(CompositeSpace({d}), std::move(rho));
}

DensityMatrix qubit_superposition_state() {
    // (|0> + i|1>)/sqrt(2): rho_10 = <1|rho|0> = i/2
    ComplexMatrix rho(2, 2);
    rho << Complex(0.5, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0.5, 0);
    return DensityMatrix(CompositeSpace({2}), std::move(rho));
}

}  // namespace ctfreq
