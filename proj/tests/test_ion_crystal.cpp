#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ctfreq/ion_crystal.hpp"

using namespace ctfreq;

namespace {

constexpr double kTwoPi = 2.0 * constants::pi;

CrystalConfig paper_chain() {
    CrystalConfig c;
    c.masses_amu = {39.9626, 39.9626, 23.9850};  // Ca, Ca, Mg
    c.reference_mass_amu = 39.9626;
    c.omega_z = kTwoPi * 1e6;
    c.laser_wavelength = 729e-9;
    c.laser_axis_projection = 1.0;
    return c;
}

CrystalConfig homogeneous(int n) {
    CrystalConfig c = paper_chain();
    c.masses_amu.assign(n, 39.9626);
    return c;
}

}  // namespace

TEST_CASE("two equal ions separate by 2^(1/3) length units") {
    const CrystalConfig c = homogeneous(2);
    const auto pos = equilibrium_positions(c);
    const double ell = length_scale(c);
    CHECK((pos[1] - pos[0]) / ell == doctest::Approx(std::cbrt(2.0)).epsilon(1e-10));
    CHECK(pos[0] + pos[1] == doctest::Approx(0.0));
}

TEST_CASE("three-ion chain equilibrium") {
    const CrystalConfig c = homogeneous(3);
    const auto pos = equilibrium_positions(c);
    const double ell = length_scale(c);
    CHECK(pos[0] / ell == doctest::Approx(-std::cbrt(1.25)).epsilon(1e-10));
    CHECK(pos[1] / ell == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(pos[2] / ell == doctest::Approx(std::cbrt(1.25)).epsilon(1e-10));

    // residual force at the solution (dimensionless)
    const auto mixed = equilibrium_positions(paper_chain());
    for (std::size_t j = 0; j < mixed.size(); ++j) {
        double force = mixed[j] / ell;
        for (std::size_t i = 0; i < mixed.size(); ++i) {
            if (i == j) continue;
            const double d = (mixed[j] - mixed[i]) / ell;
            force -= (d > 0 ? 1.0 : -1.0) / (d * d);
        }
        CHECK(std::abs(force) < 1e-12);
    }
}

TEST_CASE("homogeneous chain has the textbook spectrum") {
    const NormalModeResult modes = normal_modes(homogeneous(3));
    const double wz = kTwoPi * 1e6;
    CHECK(modes.mode_frequencies[0] / wz == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(modes.mode_frequencies[1] / wz == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    CHECK(modes.mode_frequencies[2] / wz == doctest::Approx(std::sqrt(29.0 / 5.0)).epsilon(1e-10));
}

TEST_CASE("mixed Ca-Ca-Mg chain matches the quoted mode table") {
    const NormalModeResult modes = normal_modes(paper_chain());
    const double mhz = kTwoPi * 1e6;
    CHECK(std::abs(modes.mode_frequencies[0] / mhz - 1.06) < 0.01);
    CHECK(std::abs(modes.mode_frequencies[1] / mhz - 1.95) < 0.01);
    CHECK(std::abs(modes.mode_frequencies[2] / mhz - 2.59) < 0.01);

    // orthonormal amplitude matrix
    const Eigen::MatrixXd gram =
        modes.mode_matrix.transpose() * modes.mode_matrix - Eigen::MatrixXd::Identity(3, 3);
    CHECK(gram.cwiseAbs().maxCoeff() < 1e-10);

    // dissipative-mode amplitude ratio (ancilla ion 2 over probe ion 1)
    const int nd = modes.dissipative_mode();
    const double ratio = modes.mode_matrix(1, nd) / modes.mode_matrix(0, nd);
    CHECK(std::abs(ratio - (-2.9)) < 0.05);
}

TEST_CASE("lamb-dicke factors") {
    const CrystalConfig c = paper_chain();
    const NormalModeResult modes = normal_modes(c);
    const int nd = modes.dissipative_mode();

    // eta = k_z sqrt(hbar / (2 m omega)) evaluated directly
    const double kz = kTwoPi / 729e-9;
    const double m = 39.9626 * constants::amu;
    const double eta_direct = kz * std::sqrt(constants::hbar / (2.0 * m * modes.mode_frequencies[nd]));
    CHECK(lamb_dicke(c, 0, nd, modes) == doctest::Approx(eta_direct).epsilon(1e-12));
    CHECK(lamb_dicke(c, 0, nd, modes) == doctest::Approx(0.0602).epsilon(2e-3));

    // scaling 1/sqrt(m omega): the lighter Mg ion has the larger factor
    CHECK(lamb_dicke(c, 2, nd, modes) ==
          doctest::Approx(eta_direct * std::sqrt(39.9626 / 23.9850)).epsilon(1e-12));
    // well inside the Lamb-Dicke regime here
    CHECK(lamb_dicke(c, 0, nd, modes) < 0.3);
}

TEST_CASE("spin-mode couplings") {
    const CrystalConfig c = paper_chain();
    const NormalModeResult modes = normal_modes(c);

    // zero Rabi frequency gives zero coupling; linear in Omega
    const auto zero = spin_mode_coupling(c, modes, {0.0, 0.0}, {0.0, 0.0});
    CHECK(std::abs(zero[0]) == 0.0);
    const auto one = spin_mode_coupling(c, modes, {1.0, 1.0}, {0.0, 0.0});
    const auto two = spin_mode_coupling(c, modes, {2.0, 2.0}, {0.0, 0.0});
    CHECK(std::abs(two[0] - 2.0 * one[0]) < 1e-15);

    // equal illumination: |coupling ratio| follows the amplitude ratio ~ 2.9
    const auto eff = effective_couplings(c, modes, {1.0, 1.0});
    CHECK(eff[0] > 0.0);
    CHECK(eff[1] / eff[0] == doctest::Approx(-2.9).epsilon(0.02));

    // inverse solve hits the ion-chain coupling targets and round-trips
    const std::vector<double> targets = {kTwoPi * 100.0, -kTwoPi * 290.0};
    const auto rabi = required_rabi(c, modes, targets);
    const auto eff2 = effective_couplings(c, modes, rabi);
    CHECK(std::abs(eff2[0] - targets[0]) < 1e-10 * std::abs(targets[0]));
    CHECK(std::abs(std::abs(eff2[1]) - std::abs(targets[1])) < 1e-10 * std::abs(targets[1]));
    // the two required intensities come out nearly equal, as exploited in
    // the equal-illumination operating point
    CHECK(rabi[0] / rabi[1] == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("configuration validation") {
    CrystalConfig c = paper_chain();
    c.masses_amu = {39.9626};
    CHECK_THROWS_AS(equilibrium_positions(c), std::invalid_argument);
    c = paper_chain();
    c.laser_axis_projection = 1.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
