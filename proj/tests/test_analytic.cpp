#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctfreq/analytic.hpp"

using namespace ctfreq;

namespace {

// Fig.-1-style parameter point: Delta = 0.05 Gamma, lambda = 0.3 Gamma,
// lambda~ = 0.6 Gamma, in units of Gamma = 1.
SystemParams reference_params() {
    SystemParams p;
    p.gamma = 1.0;
    p.omega = 0.05;
    p.omega_tilde = 0.05;
    p.omega_m = 0.0;
    p.lambda = 0.3;
    p.lambda_tilde = 0.6;
    return p;
}

}  // namespace

TEST_CASE("f_basic limits") {
    SystemParams p = reference_params();
    CHECK(std::abs(f_basic(0.0, p) - Complex(1, 0)) < 1e-15);

    // decoupled qubit: pure phase rotation e^{-i omega t}
    p.lambda = 0.0;
    for (double t : {0.3, 2.0, 17.0}) {
        const Complex expected = std::exp(Complex(0, -p.omega * t));
        CHECK(std::abs(f_basic(t, p) - expected) < 1e-12);
    }
}

TEST_CASE("f_basic is branch-invariant and degenerate-safe") {
    // Omega = 0 exactly: chi^2/4 = 4 lambda^2 with chi real
    SystemParams p;
    p.gamma = 1.0;
    p.lambda = 0.125;  // chi/2 = 0.5 = 2 lambda
    const Complex at_degeneracy = f_basic(3.0, p);
    // compare against a nearby nondegenerate point
    p.lambda = 0.125 * (1.0 + 1e-7);
    CHECK(std::abs(f_basic(3.0, p) - at_degeneracy) < 1e-6);
    p.lambda = 0.125 * (1.0 - 1e-7);
    CHECK(std::abs(f_basic(3.0, p) - at_degeneracy) < 1e-6);
}

TEST_CASE("f_ct value and asymptotics at the reference point") {
    const SystemParams p = reference_params();
    CHECK(std::abs(f_ct(0.0, p) - Complex(1, 0)) < 1e-14);

    // C_inf = 0.36/0.45 = 0.8; residual envelope at Gamma t = 30 within 2e-4
    CHECK(c_infinity(0.3, 0.6) == doctest::Approx(0.8));
    const double mod30 = std::abs(f_ct(30.0, p));
    CHECK(std::abs(mod30 - 0.8) < 2e-4);

    // envelope bound (lambda^2/lambda~^2) C_inf e^{-Gamma t/4} (1 + |chi|/2|Z|)
    const Complex z = big_z(p);
    const double env_coeff =
        (p.lambda * p.lambda) / (p.lambda_tilde * p.lambda_tilde) * 0.8 *
        (1.0 + std::abs(chi(p)) / (2.0 * std::abs(z)));
    for (double t = 4.5; t <= 30.0; t += 0.5) {
        const double dev = std::abs(std::abs(f_ct(t, p)) - 0.8);
        CHECK(dev <= env_coeff * std::exp(-t / 4.0) * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("f_ct rejects degenerate inputs") {
    SystemParams p = reference_params();
    p.lambda_tilde = 0.0;
    CHECK_THROWS_AS(f_ct(1.0, p), std::invalid_argument);
    p = reference_params();
    p.omega_tilde = 0.06;  // off-resonant
    CHECK_THROWS_AS(f_ct(1.0, p), std::invalid_argument);
}

TEST_CASE("c_infinity properties") {
    CHECK(c_infinity(0.3, 0.0) == doctest::Approx(0.0));
    CHECK(c_infinity(0.1, 0.29) == doctest::Approx(0.0841 / 0.0941).epsilon(1e-12));
    CHECK(c_infinity(0.1, -0.29) == doctest::Approx(c_infinity(0.1, 0.29)));
    CHECK_THROWS_AS(c_infinity(0.0, 0.0), std::invalid_argument);

    // monotone increasing in |lambda~| at fixed lambda
    double prev = 0.0;
    for (double lt = 0.05; lt < 2.0; lt += 0.05) {
        const double c = c_infinity(0.3, lt);
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("amplitude evolution reproduces both closed forms") {
    const SystemParams p = reference_params();

    const AmplitudeState start = amplitude_evolution(0.0, p, Complex(1, 0));
    CHECK(std::abs(start.kappa - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(start.a_amp) < 1e-12);
    CHECK(std::abs(start.kappa_tilde) < 1e-12);

    // resonant ancilla: kappa(t) = f_ct(t)
    for (double t = 0.5; t <= 30.0; t += 0.5) {
        const AmplitudeState s = amplitude_evolution(t, p, Complex(1, 0));
        CHECK(std::abs(s.kappa - f_ct(t, p)) < 1e-10);
    }

    // decoupled ancilla: kappa(t) = f_basic(t) for any omega_tilde
    SystemParams q = reference_params();
    q.lambda_tilde = 0.0;
    q.omega_tilde = 2.7;
    for (double t = 0.5; t <= 30.0; t += 0.5) {
        const AmplitudeState s = amplitude_evolution(t, q, Complex(1, 0));
        CHECK(std::abs(s.kappa - f_basic(t, q)) < 1e-10);
    }
}

TEST_CASE("amplitude evolution at an exceptional point") {
    // Gamma = 4 lambda with lambda~ = 0 makes the amplitude matrix defective
    // (Omega = 0, a Jordan block); the solver must fall back to the matrix
    // exponential and still agree with the series-evaluated closed form.
    SystemParams p;
    p.gamma = 1.0;
    p.lambda = 0.25;
    for (double t : {0.5, 3.0, 12.0}) {
        const AmplitudeState s = amplitude_evolution(t, p, Complex(1, 0));
        CHECK(std::abs(s.kappa - f_basic(t, p)) < 1e-9);
        CHECK(std::abs(s.kappa_tilde) < 1e-12);
    }
}

TEST_CASE("contractivity over randomized parameters") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        SystemParams p;
        p.gamma = 0.2 + 2.0 * u(rng);
        p.omega = 2.0 * (u(rng) - 0.5);
        p.omega_tilde = p.omega;
        p.omega_m = 0.5 * (u(rng) - 0.5);
        p.lambda = 0.05 + u(rng);
        p.lambda_tilde = (u(rng) < 0.5 ? -1 : 1) * (0.05 + u(rng));
        for (double t : {0.1, 1.0, 5.0, 20.0}) {
            CHECK(std::abs(f_basic(t, p)) <= 1.0 + 1e-10);
            CHECK(std::abs(f_ct(t, p)) <= 1.0 + 1e-10);
            const AmplitudeState s = amplitude_evolution(t, p, Complex(0.6, 0.3));
            CHECK(s.norm2() <= std::norm(Complex(0.6, 0.3)) + 1e-10);
        }
    }
}
