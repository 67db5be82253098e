#include "ctfreq/spaces.hpp"

namespace ctfreq {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, int slot, const CompositeSpace& space) {
    if (slot < 0 || slot >= space.factors())
        throw std::invalid_argument("embed: slot out of range");
    if (op.rows() != space.factor_dims[slot] || op.cols() != space.factor_dims[slot])
        throw std::invalid_argument("embed: operator does not fit the factor dimension");
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < space.factors(); ++k) {
        if (k == slot)
            out = kron(out, op);
        else
            out = kron(out, ComplexMatrix::Identity(space.factor_dims[k], space.factor_dims[k]));
    }
    return out;
}

DensityMatrix DensityMatrix::checked(CompositeSpace s, ComplexMatrix m, double herm_tol,
                                     double trace_tol, double positivity_tol) {
    DensityMatrix rho(std::move(s), std::move(m));
    if (rho.hermiticity_defect() > herm_tol)
        throw NumericalError("DensityMatrix: not Hermitian within tolerance");
    if (rho.trace_defect() > trace_tol)
        throw NumericalError("DensityMatrix: trace differs from 1 beyond tolerance");
    if (rho.min_eigenvalue() < -positivity_tol)
        throw NumericalError("DensityMatrix: negative eigenvalue beyond tolerance");
    return rho;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
    const auto& dims = rho.space.factor_dims;
    const int nf = rho.space.factors();
    if (keep < 0 || keep >= nf) throw std::invalid_argument("partial_trace: keep index out of range");

    const int dk = dims[keep];
    // strides of the mixed-radix index (last factor varies fastest)
    std::vector<int> stride(nf, 1);
    for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

    const int rest = rho.space.dim() / dk;
    ComplexMatrix red = ComplexMatrix::Zero(dk, dk);
    // enumerate all basis states, bucket by the kept factor's digit
    std::vector<int> digit(rho.space.dim());
    for (int idx = 0; idx < rho.space.dim(); ++idx)
        digit[idx] = (idx / stride[keep]) % dk;
    // group indices with identical digits on all traced factors
    std::vector<int> rest_index(rho.space.dim());
    for (int idx = 0; idx < rho.space.dim(); ++idx) {
        int r = 0;
        for (int f = 0; f < nf; ++f) {
            if (f == keep) continue;
            r = r * dims[f] + (idx / stride[f]) % dims[f];
        }
        rest_index[idx] = r;
    }
    std::vector<std::vector<int>> by_rest(rest);
    for (int idx = 0; idx < rho.space.dim(); ++idx) by_rest[rest_index[idx]].push_back(idx);
    for (const auto& group : by_rest)
        for (int a : group)
            for (int b : group) red(digit[a], digit[b]) += rho.matrix(a, b);

    return DensityMatrix(CompositeSpace({dk}), std::move(red));
}

}  // namespace ctfreq
