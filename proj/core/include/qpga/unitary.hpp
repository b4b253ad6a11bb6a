// Full-register unitary construction and comparison utilities. The compose
// path deliberately builds dense matrices by embedding and multiplying, so it
// can serve as an independent oracle for the statevector gate kernels.
#pragma once

#include <vector>

#include "qpga/rng.hpp"
#include "qpga/state.hpp"
#include "qpga/types.hpp"

namespace qpga {

// max-entry deviation of u'u from the identity
double unitarity_error(const Matrix& u);

inline bool is_unitary(const Matrix& u, double tol = 1e-10) {
    return unitarity_error(u) <= tol;
}

// |tr(u'v)|^2 / dim^2; global-phase invariant, 1 iff u = e^{i phi} v.
double operator_fidelity(const Matrix& u, const Matrix& v);

// Smallest max-entry distance between u and e^{i phi} v over the phase phi.
double phase_aligned_distance(const Matrix& u, const Matrix& v);

// A k-qubit gate bound to an ordered tuple of (1-based) target qubits.
struct GateOp {
    Matrix matrix;             // 2^k x 2^k
    std::vector<int> targets;  // length k, distinct, in range
};

// Embeds `op` into the full 2^n register (identity elsewhere).
Matrix embed(const GateOp& op, int n_qubits);

// Full-register unitary for a gate list in circuit order: successive gates
// left-multiply, so compose({g1, g2}) = M(g2) * M(g1).
Matrix compose(const std::vector<GateOp>& gates, int n_qubits);

Matrix cz_matrix();  // diag(1,1,1,-1)

// Haar-distributed random unitary (Ginibre + QR with phase fix).
Matrix random_unitary(int dim, Rng& rng);
Matrix random_unitary(int dim, RngSeed seed);

}  // namespace qpga
