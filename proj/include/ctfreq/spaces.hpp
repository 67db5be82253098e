// spaces.hpp — composite Hilbert-space bookkeeping: tensor factors,
// Kronecker products, embeddings and partial traces.
#pragma once

#include <utility>
#include <vector>

#include "ctfreq/types.hpp"

namespace ctfreq {

// Ordered list of subsystem dimensions. The ordering convention is fixed
// once and used by every tensor/partial-trace operation in the library:
// probe first, ancilla second (when present), mode last.
struct CompositeSpace {
    std::vector<int> factor_dims;

    CompositeSpace() = default;
    explicit CompositeSpace(std::vector<int> dims) : factor_dims(std::move(dims)) {
        if (factor_dims.empty())
            throw std::invalid_argument("CompositeSpace: need at least one factor");
        for (int d : factor_dims)
            if (d < 1) throw std::invalid_argument("CompositeSpace: factor dims must be positive");
    }

    int dim() const {
        int n = 1;
        for (int d : factor_dims) n *= d;
        return n;
    }
    int factors() const { return static_cast<int>(factor_dims.size()); }

    bool operator==(const CompositeSpace& other) const { return factor_dims == other.factor_dims; }
};

// Standard Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op acting on the given factor slot.
ComplexMatrix embed(const ComplexMatrix& op, int slot, const CompositeSpace& space);

// Hermitian, unit-trace, positive-semidefinite operator on a composite
// space with recorded subsystem dimensions.
struct DensityMatrix {
    CompositeSpace space;
    ComplexMatrix matrix;

    DensityMatrix() = default;
    DensityMatrix(CompositeSpace s, ComplexMatrix m) : space(std::move(s)), matrix(std::move(m)) {
        if (matrix.rows() != matrix.cols() || matrix.rows() != space.dim())
            throw std::invalid_argument("DensityMatrix: matrix does not match space dimension");
    }

    // Validating factory: Hermitian within 1e-10, trace 1 within 1e-10,
    // min eigenvalue >= -1e-8.
    static DensityMatrix checked(CompositeSpace s, ComplexMatrix m,
                                 double herm_tol = 1e-10, double trace_tol = 1e-10,
                                 double positivity_tol = 1e-8);

    double trace_defect() const { return std::abs(matrix.trace() - Complex(1.0, 0.0)); }
    double hermiticity_defect() const { return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff(); }
    double min_eigenvalue() const;
    double purity() const { return (matrix * matrix).trace().real(); }
};

// Reduced state on the kept factor; trace preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

}  // namespace ctfreq
