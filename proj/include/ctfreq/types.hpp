// types.hpp — shared aliases, error categories, physical constants
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ctfreq {

using Complex = std::complex<double>;

// Dense complex matrix with explicit row/column dimensions; the universal
// carrier for operators and states throughout the library.
using ComplexMatrix = Eigen::MatrixXcd;

// Bad or inconsistent user input (config files, CLI values). Exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical integrity failure (trace drift, positivity loss, truncation
// overflow). Exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver did not converge. Exit code 3.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace constants {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double epsilon0 = 8.8541878128e-12;      // F/m
inline constexpr double amu = 1.66053906660e-27;          // kg
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants

// Entrywise comparison with an absolute tolerance; never use exact
// floating equality on matrices.
inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace ctfreq
