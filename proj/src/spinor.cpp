#include "relbell/spinor.hpp"

#include <cmath>

namespace relbell::relkin {

SpinorCoefficients spinor_coefficients(Rapidity alpha_d, const FourMomentum& p,
                                       const wavepacket::PacketSpec& packet, Side side) {
    const FourMomentum q = LorentzBoost{alpha_d}.inverse().apply(p);

    SpinorCoefficients out;
    out.C = std::cosh(0.5 * alpha_d.value);
    out.S = std::sinh(0.5 * alpha_d.value);
    out.K = std::sqrt(q.q0() / p.q0()) / std::sqrt((q.q0() + 1.0) * (p.q0() + 1.0));

    const double kf = out.K * wavepacket::gaussian_amplitude(q, packet);
    const double diag = out.C * (q.q0() + 1.0) + out.S * q.qx();
    const double flip = out.S * q.qz();

    if (side == Side::A) {
        out.first = kf * Complex(diag, out.S * q.qy());
        out.second = kf * Complex(flip, 0.0);
    } else {
        out.first = kf * Complex(-flip, 0.0);
        out.second = kf * Complex(diag, -out.S * q.qy());
    }
    return out;
}

}  // namespace relbell::relkin
