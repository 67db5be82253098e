#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctfreq/ops.hpp"

using namespace ctfreq;

TEST_CASE("ladder operators on the truncated Fock space") {
    const auto [a1, a1dag] = boson_ops(1);
    ComplexMatrix expected(2, 2);
    expected << 0, 1, 0, 0;
    CHECK(approx_equal(a1, expected, 0.0));

    const auto [a, adag] = boson_ops(7);
    CHECK(approx_equal(adag, a.adjoint(), 0.0));

    // a|n> = sqrt(n)|n-1>
    for (int n = 1; n <= 7; ++n) CHECK(a(n - 1, n).real() == doctest::Approx(std::sqrt(n)));

    // [a, a†] = 1 below the truncation level, -n_max at the top
    const ComplexMatrix comm = a * adag - adag * a;
    for (int n = 0; n < 7; ++n) CHECK(comm(n, n).real() == doctest::Approx(1.0));
    CHECK(comm(7, 7).real() == doctest::Approx(-7.0));

    // number operator spectrum is exactly 0..n_max
    const ComplexMatrix num = adag * a;
    for (int n = 0; n <= 7; ++n) CHECK(num(n, n).real() == doctest::Approx(n));
    CHECK(num.cwiseAbs().sum() == doctest::Approx(num.diagonal().cwiseAbs().sum()));

    CHECK_THROWS_AS(boson_ops(0), std::invalid_argument);
}

TEST_CASE("thermal state populations and truncation") {
    const DensityMatrix vac = thermal_state(0.0, 7);
    CHECK(vac.matrix(0, 0).real() == doctest::Approx(1.0));
    CHECK(vac.matrix.diagonal().tail(7).cwiseAbs().sum() == doctest::Approx(0.0));

    for (double nbar : {0.0, 0.02, 0.05, 0.5}) {
        const DensityMatrix th = thermal_state(nbar, 7);
        CHECK(std::abs(th.matrix.trace() - Complex(1, 0)) == doctest::Approx(0.0));
        for (int n = 0; n <= 7; ++n) CHECK(th.matrix(n, n).real() >= 0.0);
        // mean occupation never exceeds the untruncated n_bar
        double mean = 0;
        for (int n = 0; n <= 7; ++n) mean += n * th.matrix(n, n).real();
        CHECK(mean <= nbar + 1e-12);
    }

    // p0 close to the untruncated 1/(nbar+1); geometric tail beyond n_max tiny
    const DensityMatrix th = thermal_state(0.05, 7);
    CHECK(th.matrix(0, 0).real() == doctest::Approx(1.0 / 1.05).epsilon(1e-9));
    const double r = 0.02 / 1.02;
    const double tail = std::pow(r, 8) / (1.0 - r);
    CHECK(tail < 1e-10);

    CHECK_THROWS_AS(thermal_state(-0.1, 7), std::invalid_argument);
}

TEST_CASE("ramsey-prepared qubit state") {
    const DensityMatrix psi = qubit_superposition_state();
    CHECK(psi.matrix(0, 0).real() == doctest::Approx(0.5));
    CHECK(psi.matrix(1, 1).real() == doctest::Approx(0.5));
    // <1|rho|0> = i/2
    CHECK(psi.matrix(1, 0).real() == doctest::Approx(0.0));
    CHECK(psi.matrix(1, 0).imag() == doctest::Approx(0.5));
    CHECK(psi.purity() == doctest::Approx(1.0));
}

TEST_CASE("pauli algebra sanity") {
    CHECK(approx_equal(sigma_plus(), sigma_minus().adjoint(), 0.0));
    // sigma_z = |1><1| - |0><0| in the ground-first basis
    CHECK(sigma_z()(0, 0).real() == doctest::Approx(-1.0));
    CHECK(sigma_z()(1, 1).real() == doctest::Approx(1.0));
    CHECK(approx_equal(sigma_x() * sigma_x(), identity(2), 0.0));
    CHECK(approx_equal(sigma_plus() + sigma_minus(), sigma_x(), 0.0));
}
