#include "qpga/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpga {

namespace {

void check_qubit_count(int n) {
    if (n < 1) throw std::invalid_argument("StateVector: n_qubits must be >= 1");
    if (n > 30) throw std::invalid_argument("StateVector: n_qubits too large for dense simulation");
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_ = Vector::Zero(Eigen::Index(1) << n_qubits);
    amps_(0) = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    if (index >= (1ULL << n_qubits)) throw std::out_of_range("StateVector::basis: index out of range");
    Vector v = Vector::Zero(Eigen::Index(1) << n_qubits);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(n_qubits, std::move(v));
}

StateVector::StateVector(int n_qubits, Vector amplitudes) : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (Eigen::Index(1) << n_qubits))
        throw std::invalid_argument("StateVector: amplitude vector must have length 2^n_qubits");
}

StateVector apply_single_qubit(const StateVector& state, int qubit_index, const Matrix2& u) {
    const int n = state.n_qubits();
    if (qubit_index < 1 || qubit_index > n)
        throw std::out_of_range("apply_single_qubit: qubit index " + std::to_string(qubit_index) +
                                " out of range for " + std::to_string(n) + " qubits");
    const Matrix2 dev = u.adjoint() * u - Matrix2::Identity();
    if (dev.cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("apply_single_qubit: matrix is not unitary");

    const std::uint64_t stride = 1ULL << (n - qubit_index);
    Vector out = state.amplitudes();
    const std::uint64_t dim = out.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t k = 0; k < stride; ++k) {
            const std::uint64_t i0 = base + k;
            const std::uint64_t i1 = i0 + stride;
            const Complex a0 = out(i0), a1 = out(i1);
            out(i0) = u(0, 0) * a0 + u(0, 1) * a1;
            out(i1) = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_cz(const StateVector& state, int i, int j) {
    const int n = state.n_qubits();
    if (i == j) throw std::invalid_argument("apply_cz: control and target must differ");
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("apply_cz: qubit index out of range");

    const std::uint64_t mask = (1ULL << (n - i)) | (1ULL << (n - j));
    Vector out = state.amplitudes();
    const std::uint64_t dim = out.size();
    for (std::uint64_t k = 0; k < dim; ++k)
        if ((k & mask) == mask) out(k) = -out(k);
    return StateVector(n, std::move(out));
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity: dimension mismatch");
    Complex ov = 0.0;
    const Vector& va = a.amplitudes();
    const Vector& vb = b.amplitudes();
    for (Eigen::Index k = 0; k < va.size(); ++k) ov += std::conj(va(k)) * vb(k);
    return std::norm(ov);
}

StateVector sample_random_state(int n_qubits, Rng& rng) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Eigen::VectorXd mags(dim);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Eigen::Index k = 0; k < dim; ++k) {
            mags(k) = rng.uniform();
            norm2 += mags(k) * mags(k);
        }
    } while (norm2 == 0.0);
    mags /= std::sqrt(norm2);
    Vector amps(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double phase = rng.angle();
        amps(k) = mags(k) * Complex(std::cos(phase), std::sin(phase));
    }
    return StateVector(n_qubits, std::move(amps));
}

StateVector sample_random_state(int n_qubits, RngSeed seed) {
    Rng rng(seed);
    return sample_random_state(n_qubits, rng);
}

}  // namespace qpga
