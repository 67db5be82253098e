#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctfreq/analytic.hpp"
#include "ctfreq/lindblad.hpp"
#include "ctfreq/ramsey.hpp"

using namespace ctfreq;

namespace {

SystemParams fig1_params() {
    SystemParams p;
    p.gamma = 1.0;
    p.omega = 0.05;
    p.omega_tilde = 0.05;
    p.lambda = 0.3;
    p.lambda_tilde = 0.6;
    p.n_max = 7;
    return p;
}

// probe in (|0> + i|1>)/sqrt(2), everything else in the ground/vacuum state
DensityMatrix superposition_initial(const LindbladModel& model) {
    DensityMatrix rho0 = ramsey_ground_state(
        SystemParams{.n_max = model.space.factor_dims.back() - 1}, model.space.factors() == 3);
    return apply_pi_half_pulse(rho0, 0);
}

}  // namespace

TEST_CASE("model construction") {
    SystemParams p = fig1_params();
    const LindbladModel probe = build_probe_mode_model(p);
    CHECK(probe.space.dim() == 16);
    CHECK(probe.hamiltonian.rows() == 16);
    CHECK((probe.hamiltonian - probe.hamiltonian.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(probe.jumps.size() == 1);  // n_bar = 0, gamma_se = 0: single (Gamma, a) jump
    CHECK(probe.jumps[0].first == doctest::Approx(p.gamma));

    const LindbladModel full = build_ancilla_model(p);
    CHECK(full.space.dim() == 32);
    REQUIRE(full.jumps.size() == 1);

    p.n_bar = 0.05;
    p.gamma_se = 1e-4;
    const LindbladModel warm = build_ancilla_model(p);
    REQUIRE(warm.jumps.size() == 4);
    CHECK(warm.jumps[0].first == doctest::Approx(p.gamma * 1.05));
    CHECK(warm.jumps[1].first == doctest::Approx(p.gamma * 0.05));
    CHECK(warm.jumps[2].first == doctest::Approx(p.gamma_se));
    CHECK(warm.jumps[3].first == doctest::Approx(p.gamma_se));
}

TEST_CASE("total excitation number commutes with the coherent part") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_ancilla_model(p);
    const auto [a, adag] = boson_ops(p.n_max);
    const ComplexMatrix n_exc = embed(sigma_plus() * sigma_minus(), 0, m.space) +
                                embed(sigma_plus() * sigma_minus(), 1, m.space) +
                                embed(adag * a, 2, m.space);
    const ComplexMatrix comm = m.hamiltonian * n_exc - n_exc * m.hamiltonian;
    CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("null generator leaves the state untouched") {
    LindbladModel m;
    m.space = CompositeSpace({2, 2});
    m.hamiltonian = ComplexMatrix::Zero(4, 4);
    DensityMatrix rho0(m.space, ComplexMatrix::Zero(4, 4));
    rho0.matrix(0, 0) = 0.25;
    rho0.matrix(3, 3) = 0.75;
    rho0.matrix(0, 3) = rho0.matrix(3, 0) = 0.2;
    const auto traj = evolve(m, rho0, 1.0, 0.01, 10);
    CHECK(approx_equal(traj.back().state.matrix, rho0.matrix, 1e-15));
}

TEST_CASE("pure damping decays the occupation exponentially") {
    SystemParams p;
    p.gamma = 1.0;
    p.n_max = 3;
    LindbladModel m;
    m.space = CompositeSpace({4});
    m.hamiltonian = ComplexMatrix::Zero(4, 4);
    const auto [a, adag] = boson_ops(3);
    m.jumps.emplace_back(p.gamma, a);

    ComplexMatrix one = ComplexMatrix::Zero(4, 4);
    one(1, 1) = 1.0;
    const auto traj = evolve(m, DensityMatrix(m.space, one), 5.0, 1e-3, 50);
    for (const auto& pt : traj) {
        double n_mean = 0;
        for (int n = 0; n < 4; ++n) n_mean += n * pt.state.matrix(n, n).real();
        CHECK(std::abs(n_mean - std::exp(-pt.time)) < 1e-8);
    }
}

TEST_CASE("probe model reproduces the basic decoherence function") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_probe_mode_model(p);
    const DensityMatrix rho0 = superposition_initial(m);

    double max_coh_dev = 0, max_pop_dev = 0;
    const auto traj = evolve(m, rho0, 30.0, 1e-3, 60);
    for (const auto& pt : traj) {
        const DensityMatrix probe = partial_trace(pt.state, 0);
        const Complex f = f_basic(pt.time, p);
        // rho_10(t) = f rho_10(0), rho_11(t) = |f|^2 rho_11(0)
        max_coh_dev = std::max(max_coh_dev,
                               std::abs(probe.matrix(1, 0) - f * Complex(0, 0.5)));
        max_pop_dev =
            std::max(max_pop_dev, std::abs(probe.matrix(1, 1).real() - 0.5 * std::norm(f)));
    }
    CHECK(max_coh_dev < 1e-6);
    CHECK(max_pop_dev < 1e-6);
}

TEST_CASE("ancilla model reproduces the trapped decoherence function") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_ancilla_model(p);
    const DensityMatrix rho0 = superposition_initial(m);

    double max_dev = 0, max_pop_dev = 0;
    const auto traj = evolve(m, rho0, 30.0, 1e-3, 60);
    for (const auto& pt : traj) {
        const DensityMatrix probe = partial_trace(pt.state, 0);
        const Complex f = f_ct(pt.time, p);
        // amplitude-damping structure: rho_10 -> f~ rho_10, rho_11 -> |f~|^2 rho_11
        max_dev = std::max(max_dev, std::abs(probe.matrix(1, 0) - f * Complex(0, 0.5)));
        max_pop_dev =
            std::max(max_pop_dev, std::abs(probe.matrix(1, 1).real() - 0.5 * std::norm(f)));
    }
    CHECK(max_dev < 1e-6);
    CHECK(max_pop_dev < 1e-6);
}

TEST_CASE("decoupled ancilla reduces to the probe-mode dynamics") {
    SystemParams p = fig1_params();
    p.lambda_tilde = 0.0;
    const LindbladModel full = build_ancilla_model(p);
    const LindbladModel probe = build_probe_mode_model(p);

    const auto traj_full = evolve(full, superposition_initial(full), 10.0, 1e-3, 20);
    const auto traj_probe = evolve(probe, superposition_initial(probe), 10.0, 1e-3, 20);
    for (std::size_t k = 0; k < traj_full.size(); ++k) {
        const DensityMatrix a = partial_trace(traj_full[k].state, 0);
        const DensityMatrix b = partial_trace(traj_probe[k].state, 0);
        CHECK(approx_equal(a.matrix, b.matrix, 1e-10));
    }
}

TEST_CASE("single-excitation sector stays closed") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_ancilla_model(p);
    const auto traj = evolve(m, superposition_initial(m), 20.0, 1e-3, 40);
    // population outside the {0,1}-excitation sector
    const auto& dims = m.space.factor_dims;
    double leak = 0;
    for (const auto& pt : traj) {
        for (int idx = 0; idx < m.space.dim(); ++idx) {
            const int nq = idx / (2 * (p.n_max + 1));
            const int na = (idx / (p.n_max + 1)) % 2;
            const int nm = idx % (p.n_max + 1);
            if (nq + na + nm > 1) leak = std::max(leak, pt.state.matrix(idx, idx).real());
        }
    }
    CHECK(dims.size() == 3);
    CHECK(leak < 1e-10);
}

TEST_CASE("trace, hermiticity and positivity hold along realistic runs") {
    SystemParams p = fig1_params();
    p.n_bar = 0.05;
    p.gamma_se = 1.4e-4;
    const LindbladModel m = build_ancilla_model(p);
    const DensityMatrix rho0 = apply_pi_half_pulse(ramsey_ground_state(p, true), 0);
    const auto traj = evolve(m, rho0, 20.0, 2e-3, 40);
    for (const auto& pt : traj) {
        CHECK(pt.state.trace_defect() < 1e-8);
        CHECK(pt.state.hermiticity_defect() < 1e-8);
        CHECK(pt.state.min_eigenvalue() > -1e-6);
    }
}

TEST_CASE("halving dt does not move observables") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_ancilla_model(p);
    const DensityMatrix rho0 = superposition_initial(m);
    const auto coarse = evolve(m, rho0, 10.0, 1e-2, 10);
    const auto fine = evolve(m, rho0, 10.0, 5e-3, 10);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const double a = partial_trace(coarse[k].state, 0).matrix(1, 1).real();
        const double b = partial_trace(fine[k].state, 0).matrix(1, 1).real();
        CHECK(std::abs(a - b) < 1e-8);
    }
}

TEST_CASE("oversized steps are rejected by the state monitors") {
    // damping from the top Fock level: the -n_max Gamma eigenvalue leaves
    // the RK4 stability region at this step size
    LindbladModel m;
    m.space = CompositeSpace({8});
    m.hamiltonian = ComplexMatrix::Zero(8, 8);
    m.jumps.emplace_back(1.0, boson_ops(7).first);
    ComplexMatrix top = ComplexMatrix::Zero(8, 8);
    top(7, 7) = 1.0;
    CHECK_THROWS_AS(evolve(m, DensityMatrix(m.space, top), 50.0, 2.0, 5), NumericalError);
}

TEST_CASE("dimension mismatches are rejected") {
    const SystemParams p = fig1_params();
    const LindbladModel m = build_probe_mode_model(p);
    DensityMatrix wrong(CompositeSpace({2, 2}), identity(4) / 4.0);
    CHECK_THROWS_AS(evolve(m, wrong, 1.0, 1e-3, 5), std::invalid_argument);
}

TEST_CASE("default step scales with the fastest rate") {
    SystemParams p = fig1_params();
    const double dt1 = default_dt(p);
    p.lambda_tilde = 10.0;
    CHECK(default_dt(p) == doctest::Approx(dt1 / 10.0));
}
