#include "ctfreq/ramsey.hpp"

#include <cmath>

namespace ctfreq {

namespace {

ComplexMatrix half_pulse_unitary() {
    // exp(+i (pi/4) sigma_x) = (I + i sigma_x)/sqrt(2)
    return (identity(2) + Complex(0, 1) * sigma_x()) / std::sqrt(2.0);
}

}  // namespace

DensityMatrix apply_pi_half_pulse(const DensityMatrix& rho, int target) {
    if (target < 0 || target >= rho.space.factors())
        throw std::invalid_argument("apply_pi_half_pulse: target factor out of range");
    if (rho.space.factor_dims[target] != 2)
        throw std::invalid_argument("apply_pi_half_pulse: target factor is not a qubit");
    const ComplexMatrix u = embed(half_pulse_unitary(), target, rho.space);
    return DensityMatrix(rho.space, u * rho.matrix * u.adjoint());
}

DensityMatrix ramsey_ground_state(const SystemParams& p, bool with_ancilla) {
    p.validate();
    ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    const DensityMatrix thermal = thermal_state(p.n_bar, p.n_max);
    ComplexMatrix m = with_ancilla ? kron(kron(ground, ground), thermal.matrix)
                                   : kron(ground, thermal.matrix);
    std::vector<int> dims = with_ancilla ? std::vector<int>{2, 2, p.n_max + 1}
                                         : std::vector<int>{2, p.n_max + 1};
    return DensityMatrix(CompositeSpace(dims), std::move(m));
}

std::vector<RamseySample> simulate_ramsey_signal(const SystemParams& p, double t_final,
                                                 const RamseyRunOptions& opts) {
    const DensityMatrix rho0 = apply_pi_half_pulse(ramsey_ground_state(p, true), 0);
    const LindbladModel model = build_ancilla_model(p);

    // P(t) = Tr[Pi_exc U rho(t) U†] = Tr[(U† Pi_exc U) rho(t)]
    const ComplexMatrix u = embed(half_pulse_unitary(), 0, model.space);
    ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
    proj(1, 1) = 1.0;
    const ComplexMatrix meas = u.adjoint() * embed(proj, 0, model.space) * u;

    EvolveOptions eopts;
    eopts.top_level_tol = opts.top_level_tol;
    const double dt = opts.dt > 0 ? opts.dt : default_dt(p);

    std::vector<RamseySample> out;
    out.reserve(opts.sample_count + 1);
    evolve_observe(model, rho0, t_final, dt, opts.sample_count, eopts,
                   [&](int, double time, const ComplexMatrix& rho) {
                       out.push_back({time, (meas * rho).trace().real()});
                   });
    return out;
}

}  // namespace ctfreq
