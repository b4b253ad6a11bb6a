#include "qpga/mzi.hpp"

#include <cmath>
#include <stdexcept>

namespace qpga {

namespace {

Complex eip(double x) { return Complex(std::cos(x), std::sin(x)); }

}  // namespace

Matrix2 mzi_unitary(const MziParams& p) {
    const Complex et = eip(p.theta);
    Matrix2 u;
    u(0, 0) = 0.5 * eip(p.zeta + p.phi) * (et + 1.0);
    u(0, 1) = 0.5 * eip(p.xi + p.phi) * (et - 1.0);
    u(1, 0) = 0.5 * eip(p.zeta) * (et - 1.0);
    u(1, 1) = 0.5 * eip(p.xi) * (et + 1.0);
    return u;
}

MziParams u_to_mzi_params(const Matrix2& u) {
    if ((u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("u_to_mzi_params: matrix is not unitary");

    const double c = std::abs(u(0, 0));  // cos(theta/2)
    const double s = std::abs(u(1, 0));  // sin(theta/2)
    MziParams p;
    p.theta = 2.0 * std::atan2(s, c);

    if (s < 1e-15) {
        // diagonal: U = diag(e^{i a}, e^{i b})
        p.theta = 0.0;
        p.phi = 0.0;
        p.zeta = std::arg(u(0, 0));
        p.xi = std::arg(u(1, 1));
        return p;
    }
    if (c < 1e-15) {
        // anti-diagonal: U = [[0, e^{i(xi+phi)}(-1)], [e^{i zeta}(-1), 0]]
        p.theta = kPi;
        p.phi = 0.0;
        p.zeta = std::arg(-u(1, 0));
        p.xi = std::arg(-u(0, 1));
        return p;
    }
    // generic: arg u10 = zeta + theta/2 + pi/2, arg u11 = xi + theta/2,
    //          arg u00 = zeta + phi + theta/2
    p.zeta = std::arg(u(1, 0)) - 0.5 * p.theta - 0.5 * kPi;
    p.xi = std::arg(u(1, 1)) - 0.5 * p.theta;
    p.phi = std::arg(u(0, 0)) - p.zeta - 0.5 * p.theta;
    return p;
}

Matrix2 eta_mixer(double eta) {
    const Complex ee = eip(eta);
    Matrix2 t;
    t(0, 0) = 0.5 * (-ee - 1.0);
    t(0, 1) = 0.5 * (kI * ee - kI);
    t(1, 0) = 0.5 * (kI * ee - kI);
    t(1, 1) = 0.5 * (ee + 1.0);
    return t;
}

// Two-photon propagation over the four relevant creation-operator modes:
// 0 = |1>-waveguide of qubit 1, 1 = |1>-waveguide of qubit 2,
// 2 = |0>-waveguide of qubit 1, 3 = |0>-waveguide of qubit 2.
// A two-photon state is a symmetric coefficient matrix S over modes; a mode
// substitution a_old = M a_new maps S -> M^T S M. The scattering cells flip
// the sign of double-occupancy terms in the mixed (top/bot) modes.
EtaCellOutput propagate_eta_cell(Complex c11, Complex c10, Complex c01, Complex c00, double eta) {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    auto put = [&s](int a, int b, Complex v) {
        s(a, b) += 0.5 * v;
        s(b, a) += 0.5 * v;
    };
    put(0, 1, c11);  // both photons in |1> waveguides
    put(0, 3, c10);
    put(2, 1, c01);
    put(2, 3, c00);

    const Matrix2 t = eta_mixer(eta);
    Eigen::Matrix4cd m_in = Eigen::Matrix4cd::Identity();
    m_in.topLeftCorner<2, 2>() = t;
    s = (m_in.transpose() * s * m_in).eval();

    // pi phase on components with both photons in the same scattering cell
    s(0, 0) = -s(0, 0);
    s(1, 1) = -s(1, 1);

    Eigen::Matrix4cd m_out = Eigen::Matrix4cd::Identity();
    m_out.topLeftCorner<2, 2>() = t.transpose();
    s = (m_out.transpose() * s * m_out).eval();

    EtaCellOutput out;
    out.c11 = s(0, 1) + s(1, 0);
    out.c10 = s(0, 3) + s(3, 0);
    out.c01 = s(2, 1) + s(1, 2);
    out.c00 = s(2, 3) + s(3, 2);
    out.split_top = s(0, 0);
    out.split_bot = s(1, 1);
    return out;
}

double eta_splitting_amplitude(double eta) {
    const EtaCellOutput out = propagate_eta_cell(1.0, 0.0, 0.0, 0.0, eta);
    return std::abs(out.split_top);
}

Matrix4 logical_two_qubit_gate(EtaSetting eta) {
    Matrix4 g = Matrix4::Identity();
    if (eta == EtaSetting::On) {
        g(1, 1) = kI;
        g(2, 2) = kI;
    }
    return g;
}

Matrix4 logical_two_qubit_gate(double eta) {
    const double k = eta / (0.5 * kPi);
    const double k_round = std::round(k);
    if (std::abs(k - k_round) > 1e-9)
        throw std::invalid_argument("logical_two_qubit_gate: eta must be a multiple of pi/2");
    const long ki = static_cast<long>(k_round);
    // general multiple of pi/2: diag(1, i^k, i^k, 1) on (|00>,|01>,|10>,|11>)
    const Complex ph = std::pow(kI, static_cast<double>(((ki % 4) + 4) % 4));
    Matrix4 g = Matrix4::Identity();
    g(1, 1) = ph;
    g(2, 2) = ph;
    return g;
}

}  // namespace qpga
