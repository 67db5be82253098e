// ops.hpp — qubit and truncated-oscillator operator factories, state factories.
//
// Qubit basis ordering: index 0 = |0> (ground), index 1 = |1> (excited),
// so sigma_z = |1><1| - |0><0| = diag(-1, +1) and sigma_plus = |1><0|.
// Fock basis ordering: index n = |n>.
#pragma once

#include <utility>

#include "ctfreq/spaces.hpp"

namespace ctfreq {

ComplexMatrix identity(int n);
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_plus();   // |1><0|
ComplexMatrix sigma_minus();  // |0><1|

// Truncated ladder operators on an (n_max+1)-dimensional Fock space,
// a|n> = sqrt(n)|n-1>. Returns (a, a_dag).
std::pair<ComplexMatrix, ComplexMatrix> boson_ops(int n_max);

// Diagonal thermal state p_n ∝ (n̄/(n̄+1))^n, renormalized over the
// truncated space so the trace is exactly 1.
DensityMatrix thermal_state(double n_bar, int n_max);

// Pure-state density matrix of (|0> + i|1>)/sqrt(2), the state prepared
// from |0> by the first Ramsey pulse.
DensityMatrix qubit_superposition_state();

}  // namespace ctfreq
