// Waveguide-QED scattering off the embedded four-level emitters.
//
// Dimensionless convention: group velocities are set to 1, so only the
// products omega*a, omega_prime*a and the loss ratio gamma_prime/gamma enter
// the closed forms. The resonance condition a = n*pi / (omega + omega_prime)
// makes the emitter a perfect frequency converter: r11 = 0, r13 = -1,
// R3 = -1, r33 = 0, r31 = -1.
#pragma once

#include <array>

#include "qpga/rng.hpp"
#include "qpga/state.hpp"
#include "qpga/types.hpp"

namespace qpga {

struct ScatteringParams {
    double omega_a;        // omega * a
    double omega_prime_a;  // omega' * a
    double gamma = 1.0;    // decay rate into the waveguide, > 0
    double gamma_prime = 0.0;  // extrinsic loss, >= 0

    double purcell() const;  // gamma / gamma_prime, +inf when lossless

    // geometry on the resonance condition (n = 1) with a given Purcell factor
    static ScatteringParams resonant(double purcell_factor);
};

struct ReflectionSet {
    Complex r11, r13, r3, r33, r31;
};

// Closed-form reflection amplitudes. Throws SingularScatteringError when a
// denominator degenerates.
ReflectionSet reflection_coeffs(const ScatteringParams& sp);

struct SingularScatteringError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Single-photon qubit amplitudes for the two photons entering a cell.
struct PhotonAmplitudes {
    Complex alpha_a, beta_a;  // photon A: alpha|omega> + beta|empty>
    Complex alpha_b, beta_b;  // photon B
};

// State over the 18-element product basis
// (photon B in {omega, omega', empty}) x (photon A likewise) x (emitter in {1, 3}),
// ordered B-major then A then emitter.
struct CascadeState {
    static constexpr int kDim = 18;
    enum PhotonMode { kOmega = 0, kOmegaPrime = 1, kEmpty = 2 };
    enum Emitter { kLevel1 = 0, kLevel3 = 1 };

    std::array<Complex, kDim> amps{};

    static constexpr int index(int b, int a, int e) { return (b * 3 + a) * 2 + e; }
    Complex& at(int b, int a, int e) { return amps[index(b, a, e)]; }
    Complex at(int b, int a, int e) const { return amps[index(b, a, e)]; }
    double norm2() const;
};

// The four sequential scattering maps:
//  1. photon A against emitter |1>  (r11, r13),
//  2. photon B against |1> (r11, r13) or |3> (r3),
//  3. returning A' against |3>      (r33, r31),
//  4. returning B' against |3>      (r33, r31).
// On resonance with no loss the output carries amplitudes
// (-aB aA, aB bA, bB aA, bB bA) on {|w,w,1>, |w,.,1>, |.,w,1>, |.,.,1>}.
CascadeState four_step_scatter(const PhotonAmplitudes& ph, const ReflectionSet& rs);

// 1 - |overlap|^2 of the cascade output with the ideal controlled-sigma_z
// action, with the overlap averaged coherently over the four computational
// two-photon basis inputs. Zero on resonance with no loss; decreasing in the
// Purcell factor.
double czz_gate_infidelity(const ScatteringParams& sp);

// Monte-Carlo depolarizing model: applies c-sigma_z, then with probability p
// applies it a second time (net identity). Throws when p is outside [0, 1].
StateVector depolarized_cz_trajectory(const StateVector& state, int i, int j, double p, Rng& rng);

// (purcell, infidelity) rows over a log-spaced Purcell sweep at the resonant
// geometry, sorted by purcell ascending.
std::vector<std::pair<double, double>> purcell_infidelity_sweep(double p_min, double p_max, int points);

// CSV with header "purcell,infidelity", rows formatted %.12e.
std::string purcell_sweep_csv(const std::vector<std::pair<double, double>>& rows);

}  // namespace qpga
