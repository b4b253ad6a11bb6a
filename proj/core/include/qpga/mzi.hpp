// Phase-modulated Mach-Zehnder interferometer models.
//
// The four-phase MZI realizes
//   U(zeta, xi, theta, phi) =
//     1/2 [ e^{i(zeta+phi)}(e^{i theta}+1)   e^{i(xi+phi)}(e^{i theta}-1) ]
//         [ e^{i zeta}(e^{i theta}-1)        e^{i xi}(e^{i theta}+1)      ]
// which covers all of U(2); u_to_mzi_params inverts the map exactly.
//
// The eta-shifted mixer T(eta) = R^{pi/2}_0 H R^eta_0 H R^{pi/2}_0 routes
// photon pairs toward the scattering cells. Propagating a two-qubit state
// through mixer -> pair-phase scatter -> transposed mixer yields the logical
// two-photon gate: identity at eta = 0 and diag(1, i, i, 1) at eta = pi/2,
// with a photon-pair-splitting term that vanishes only at multiples of pi/2.
#pragma once

#include "qpga/types.hpp"

namespace qpga {

struct MziParams {
    double zeta = 0.0;
    double xi = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

Matrix2 mzi_unitary(const MziParams& p);

// Exact inverse of mzi_unitary: any 2x2 unitary -> phases realizing it on the
// nose (no residual global phase). Throws if u is not unitary within 1e-8.
MziParams u_to_mzi_params(const Matrix2& u);

// Transfer matrix of the two-photon mixer MZI, Off = eta 0, On = eta pi/2.
Matrix2 eta_mixer(double eta);

enum class EtaSetting { Off, On };

// Result of pushing a two-qubit photonic state through one scattering cell.
struct EtaCellOutput {
    // coefficients on |11>, |10>, |01>, |00> after the round trip
    Complex c11, c10, c01, c00;
    // pair-splitting coefficients (two photons injected into one waveguide
    // pair), which must vanish for a valid logical gate
    Complex split_top, split_bot;
};

// Propagates amplitudes (c11, c10, c01, c00) through mixer -> scatter ->
// transposed mixer at an arbitrary mixer phase eta.
EtaCellOutput propagate_eta_cell(Complex c11, Complex c10, Complex c01, Complex c00, double eta);

// Magnitude of the pair-splitting coefficient for a pure |11> input;
// equals |sin(2 eta)| / 2 and is zero iff eta is a multiple of pi/2.
double eta_splitting_amplitude(double eta);

// Logical two-qubit gate on basis (|00>,|01>,|10>,|11>):
// Off -> identity, On -> diag(1, i, i, 1).
Matrix4 logical_two_qubit_gate(EtaSetting eta);

// Raw-phase variant. Throws std::invalid_argument when eta is not a multiple
// of pi/2 (the pair-splitting amplitude would be nonzero).
Matrix4 logical_two_qubit_gate(double eta);

}  // namespace qpga
