// Dense statevector over the computational basis of N qubits.
//
// Basis convention used everywhere in this library: qubit 1 is the most
// significant bit of the basis index, so for n qubits the amplitude of
// |b_1 b_2 ... b_n> sits at index (b_1 << (n-1)) | ... | b_n.
#pragma once

#include <cstdint>

#include "qpga/rng.hpp"
#include "qpga/types.hpp"

namespace qpga {

class StateVector {
  public:
    // |0...0> on n qubits
    explicit StateVector(int n_qubits);

    // basis state |index> (lexicographic, qubit 1 most significant)
    static StateVector basis(int n_qubits, std::uint64_t index);

    // takes ownership of an amplitude vector; must have length 2^n
    StateVector(int n_qubits, Vector amplitudes);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }

    double norm() const { return amps_.norm(); }

    // bit of `qubit` (1-based) within basis index
    int bit(std::uint64_t index, int qubit) const {
        return static_cast<int>((index >> (n_qubits_ - qubit)) & 1ULL);
    }

  private:
    int n_qubits_;
    Vector amps_;
};

// Applies a 2x2 unitary to one qubit (1-based index). Throws on an index out
// of range or when u deviates from unitarity by more than 1e-8.
StateVector apply_single_qubit(const StateVector& state, int qubit_index, const Matrix2& u);

// Controlled-sigma_z between qubits i and j: negates every amplitude whose
// basis state has both qubits set. Throws when i == j or out of range.
StateVector apply_cz(const StateVector& state, int i, int j);

// |<a|b>|^2. Symmetric in its arguments as a floating-point expression.
double fidelity(const StateVector& a, const StateVector& b);

// Random state per the magnitude/phase recipe: 2^n magnitudes uniform in
// [0,1), renormalize, then an independent uniform phase in [0,2*pi) per
// component. Deterministic for a fixed seed.
StateVector sample_random_state(int n_qubits, RngSeed rng);
StateVector sample_random_state(int n_qubits, Rng& rng);

}  // namespace qpga
