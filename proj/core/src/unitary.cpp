#include "qpga/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpga {

double unitarity_error(const Matrix& u) {
    if (u.rows() != u.cols()) return 1.0;
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double operator_fidelity(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("operator_fidelity: dimension mismatch");
    const Complex tr = (u.adjoint() * v).trace();
    const double d = static_cast<double>(u.rows());
    return std::norm(tr) / (d * d);
}

double phase_aligned_distance(const Matrix& u, const Matrix& v) {
    const Complex tr = (v.adjoint() * u).trace();
    Complex phase;
    if (std::abs(tr) > 1e-9) {
        phase = tr / std::abs(tr);
    } else {
        // trace-free overlap: align on the largest element of v instead
        Eigen::Index r = 0, c = 0;
        v.cwiseAbs().maxCoeff(&r, &c);
        if (std::abs(v(r, c)) < 1e-12 || std::abs(u(r, c)) < 1e-12) return (u - v).cwiseAbs().maxCoeff();
        const Complex ratio = u(r, c) / v(r, c);
        phase = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : Complex(1.0, 0.0);
    }
    return (u - phase * v).cwiseAbs().maxCoeff();
}

Matrix embed(const GateOp& op, int n_qubits) {
    const int k = static_cast<int>(op.targets.size());
    const Eigen::Index gd = Eigen::Index(1) << k;
    if (op.matrix.rows() != gd || op.matrix.cols() != gd)
        throw std::invalid_argument("embed: matrix size does not match target count");
    std::vector<int> seen;
    for (int t : op.targets) {
        if (t < 1 || t > n_qubits) throw std::out_of_range("embed: target out of range");
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
            throw std::invalid_argument("embed: duplicate target qubit");
        seen.push_back(t);
    }

    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Matrix full = Matrix::Zero(dim, dim);
    std::vector<std::uint64_t> tmask(k);
    for (int t = 0; t < k; ++t) tmask[t] = 1ULL << (n_qubits - op.targets[t]);
    std::uint64_t rest_mask = dim - 1;
    for (auto m : tmask) rest_mask &= ~m;

    // enumerate the non-target configurations, then the gate block
    for (std::uint64_t rest = 0;; rest = ((rest | ~rest_mask) + 1) & rest_mask) {
        for (std::uint64_t gi = 0; gi < static_cast<std::uint64_t>(gd); ++gi) {
            std::uint64_t row = rest;
            for (int t = 0; t < k; ++t)
                if ((gi >> (k - 1 - t)) & 1ULL) row |= tmask[t];
            for (std::uint64_t gj = 0; gj < static_cast<std::uint64_t>(gd); ++gj) {
                std::uint64_t col = rest;
                for (int t = 0; t < k; ++t)
                    if ((gj >> (k - 1 - t)) & 1ULL) col |= tmask[t];
                full(row, col) = op.matrix(gi, gj);
            }
        }
        if (rest == rest_mask) break;
    }
    return full;
}

Matrix compose(const std::vector<GateOp>& gates, int n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Matrix total = Matrix::Identity(dim, dim);
    for (const GateOp& g : gates) {
        if (unitarity_error(g.matrix) > 1e-8) throw std::invalid_argument("compose: gate matrix is not unitary");
        total = embed(g, n_qubits) * total;
    }
    return total;
}

Matrix cz_matrix() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
}

Matrix random_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        Complex d = r(c, c);
        q.col(c) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

Matrix random_unitary(int dim, RngSeed seed) {
    Rng rng(seed);
    return random_unitary(dim, rng);
}

}  // namespace qpga
