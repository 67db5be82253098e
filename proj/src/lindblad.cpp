#include "ctfreq/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace ctfreq {

namespace {

// Nonzero entries of a sparse operator, applied by hand. The Hamiltonians
// and jump operators of these models are ladder-like (a few entries per
// row), and at dimension 32 hand-rolled triplet loops beat general sparse
// machinery by an order of magnitude.
struct Triplets {
    struct Entry {
        int r, c;
        Complex v;
    };
    std::vector<Entry> entries;

    static Triplets from_dense(const ComplexMatrix& m, double cutoff = 0.0) {
        Triplets t;
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < m.rows(); ++r)
                if (std::abs(m(r, c)) > cutoff) t.entries.push_back({r, c, m(r, c)});
        return t;
    }
};

// out = op * rho (column-major dense, both fully in cache)
void apply_left(const Triplets& op, const ComplexMatrix& rho, ComplexMatrix& out) {
    const int d = static_cast<int>(rho.rows());
    out.setZero();
    const Complex* src = rho.data();
    Complex* dst = out.data();
    for (int j = 0; j < d; ++j, src += d, dst += d)
        for (const auto& e : op.entries) dst[e.r] += e.v * src[e.c];
}

// out += scale * (b * op†): column AXPYs, op†(c, r) = conj(op(r, c))
void accumulate_right_dagger(const Triplets& op, const ComplexMatrix& b, double scale,
                             ComplexMatrix& out) {
    const int d = static_cast<int>(b.rows());
    const Complex* bd = b.data();
    Complex* od = out.data();
    for (const auto& e : op.entries) {
        const Complex w = scale * std::conj(e.v);
        const Complex* bc = bd + d * e.c;
        Complex* oc = od + d * e.r;
        for (int i = 0; i < d; ++i) oc[i] += w * bc[i];
    }
}

// Precomputed generator pieces plus reusable workspace; no allocation per step.
struct Propagator {
    int dim;
    Triplets h_eff;  // H - (i/2) sum_k gamma_k L_k† L_k
    struct Jump {
        double rate;
        Triplets op;
    };
    std::vector<Jump> jumps;
    ComplexMatrix s, t, stage, k1, k2, k3, k4;

    explicit Propagator(const LindbladModel& model) : dim(model.space.dim()) {
        ComplexMatrix heff_dense = model.hamiltonian;
        for (const auto& [rate, op] : model.jumps) {
            heff_dense -= Complex(0, 0.5) * rate * (op.adjoint() * op);
            jumps.push_back({rate, Triplets::from_dense(op)});
        }
        h_eff = Triplets::from_dense(heff_dense);
        s.resize(dim, dim);
        t.resize(dim, dim);
        stage.resize(dim, dim);
        k1.resize(dim, dim);
        k2.resize(dim, dim);
        k3.resize(dim, dim);
        k4.resize(dim, dim);
    }

    // drho/dt = -i (H_eff rho - rho H_eff†) + sum_k gamma_k L_k rho L_k†.
    // Both one-sided products are evaluated explicitly: replacing rho H_eff†
    // by (H_eff rho)† would be exact on Hermitian states but makes the
    // stepped linear map amplify anti-Hermitian rounding noise.
    void rhs(const ComplexMatrix& rho, ComplexMatrix& out) {
        apply_left(h_eff, rho, s);  // s = H_eff rho
        t.setZero();
        accumulate_right_dagger(h_eff, rho, 1.0, t);  // t = rho H_eff†
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i) out(i, j) = Complex(0, -1) * (s(i, j) - t(i, j));
        for (const auto& jump : jumps) {
            apply_left(jump.op, rho, t);  // t = L rho
            accumulate_right_dagger(jump.op, t, jump.rate, out);  // out += rate * t L†
        }
    }

    void step(ComplexMatrix& rho, double dt) {
        rhs(rho, k1);
        stage = rho + (dt / 2) * k1;
        rhs(stage, k2);
        stage = rho + (dt / 2) * k2;
        rhs(stage, k3);
        stage = rho + dt * k3;
        rhs(stage, k4);
        rho += (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
};

// negated comparisons so NaN states are rejected too
void check_sample(const ComplexMatrix& rho, double time, const CompositeSpace& space,
                  const EvolveOptions& opts) {
    const double trace_defect = std::abs(rho.trace() - Complex(1, 0));
    if (!(trace_defect <= opts.trace_tol)) {
        std::ostringstream msg;
        msg << "evolve: trace drift " << trace_defect << " at t=" << time
            << " exceeds tolerance (dt too large)";
        throw NumericalError(msg.str());
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= opts.hermiticity_tol))
        throw NumericalError("evolve: Hermiticity loss beyond tolerance");
    if (opts.check_positivity) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
        if (!(es.eigenvalues().minCoeff() >= -opts.positivity_tol))
            throw NumericalError("evolve: negative eigenvalue beyond tolerance");
    }
    if (opts.top_level_tol > 0.0 && space.factors() >= 1) {
        const int d_last = space.factor_dims.back();
        double top = 0.0;
        for (int i = d_last - 1; i < space.dim(); i += d_last) top += rho(i, i).real();
        if (!(top <= opts.top_level_tol))
            throw NumericalError("evolve: top Fock level populated beyond truncation certificate");
    }
}

}  // namespace

void LindbladModel::validate() const {
    if (hamiltonian.rows() != space.dim() || hamiltonian.cols() != space.dim())
        throw std::invalid_argument("LindbladModel: Hamiltonian does not match the space");
    const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("LindbladModel: Hamiltonian is not Hermitian");
    for (const auto& [rate, op] : jumps) {
        if (rate < 0) throw std::invalid_argument("LindbladModel: jump rates must be >= 0");
        if (op.rows() != space.dim() || op.cols() != space.dim())
            throw std::invalid_argument("LindbladModel: jump operator does not match the space");
    }
}

LindbladModel build_probe_mode_model(const SystemParams& p) {
    p.validate();
    LindbladModel m;
    m.space = CompositeSpace({2, p.n_max + 1});
    const auto [a, adag] = boson_ops(p.n_max);
    const ComplexMatrix sz = embed(sigma_z(), 0, m.space);
    const ComplexMatrix sp = embed(sigma_plus(), 0, m.space);
    const ComplexMatrix sm = embed(sigma_minus(), 0, m.space);
    const ComplexMatrix af = embed(a, 1, m.space);
    const ComplexMatrix adf = embed(adag, 1, m.space);

    m.hamiltonian = 0.5 * p.omega * sz + p.omega_m * (adf * af) + p.lambda * (sm * adf + sp * af);
    if (p.gamma > 0) m.jumps.emplace_back(p.gamma * (p.n_bar + 1.0), af);
    if (p.gamma > 0 && p.n_bar > 0) m.jumps.emplace_back(p.gamma * p.n_bar, adf);
    if (p.gamma_se > 0) m.jumps.emplace_back(p.gamma_se, sm);
    return m;
}

LindbladModel build_ancilla_model(const SystemParams& p) {
    p.validate();
    LindbladModel m;
    m.space = CompositeSpace({2, 2, p.n_max + 1});
    const auto [a, adag] = boson_ops(p.n_max);
    const ComplexMatrix sz = embed(sigma_z(), 0, m.space);
    const ComplexMatrix szt = embed(sigma_z(), 1, m.space);
    const ComplexMatrix sp = embed(sigma_plus(), 0, m.space);
    const ComplexMatrix sm = embed(sigma_minus(), 0, m.space);
    const ComplexMatrix spt = embed(sigma_plus(), 1, m.space);
    const ComplexMatrix smt = embed(sigma_minus(), 1, m.space);
    const ComplexMatrix af = embed(a, 2, m.space);
    const ComplexMatrix adf = embed(adag, 2, m.space);

    m.hamiltonian = 0.5 * p.omega * sz + 0.5 * p.omega_tilde * szt + p.omega_m * (adf * af) +
                    p.lambda * (sm * adf + sp * af) + p.lambda_tilde * (smt * adf + spt * af);
    if (p.gamma > 0) m.jumps.emplace_back(p.gamma * (p.n_bar + 1.0), af);
    if (p.gamma > 0 && p.n_bar > 0) m.jumps.emplace_back(p.gamma * p.n_bar, adf);
    if (p.gamma_se > 0) {
        m.jumps.emplace_back(p.gamma_se, sm);
        m.jumps.emplace_back(p.gamma_se, smt);
    }
    return m;
}

double default_dt(const SystemParams& p) {
    const double scale =
        std::max({std::abs(p.omega), std::abs(p.omega_tilde), std::abs(p.omega_m),
                  std::abs(p.lambda), std::abs(p.lambda_tilde), p.gamma * (1.0 + p.n_bar),
                  p.gamma_se, 1e-30});
    return 1e-3 / scale;
}

void evolve_observe(const LindbladModel& model, const DensityMatrix& rho0, double t_final,
                    double dt, int sample_count, const EvolveOptions& opts,
                    const std::function<void(int, double, const ComplexMatrix&)>& observer) {
    model.validate();
    if (!(dt > 0)) throw std::invalid_argument("evolve: dt must be > 0");
    if (!(t_final > 0)) throw std::invalid_argument("evolve: t_final must be > 0");
    if (sample_count < 1) throw std::invalid_argument("evolve: sample_count must be >= 1");
    if (!(rho0.space == model.space))
        throw std::invalid_argument("evolve: state and model live on different spaces");

    Propagator prop(model);
    ComplexMatrix rho = rho0.matrix;
    const double sample_interval = t_final / sample_count;
    const int steps_per_sample = std::max(1, static_cast<int>(std::ceil(sample_interval / dt - 1e-12)));
    const double dt_actual = sample_interval / steps_per_sample;

    check_sample(rho, 0.0, model.space, opts);
    observer(0, 0.0, rho);
    for (int s = 1; s <= sample_count; ++s) {
        for (int k = 0; k < steps_per_sample; ++k) prop.step(rho, dt_actual);
        const double time = s * sample_interval;
        check_sample(rho, time, model.space, opts);
        observer(s, time, rho);
    }
}

std::vector<SamplePoint> evolve(const LindbladModel& model, const DensityMatrix& rho0,
                                double t_final, double dt, int sample_count,
                                const EvolveOptions& opts) {
    std::vector<SamplePoint> out;
    out.reserve(sample_count + 1);
    evolve_observe(model, rho0, t_final, dt, sample_count, opts,
                   [&](int, double time, const ComplexMatrix& rho) {
                       out.push_back({time, DensityMatrix(model.space, rho)});
                   });
    return out;
}

}  // namespace ctfreq
