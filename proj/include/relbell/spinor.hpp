#pragma once

// Boosted single-particle spinor amplitudes seen by a moving detector.

#include <complex>

#include "relbell/relkin.hpp"
#include "relbell/wavepacket.hpp"

namespace relbell::relkin {

enum class Side { A, B };

/// Two-spinor components of a boosted packet, plus the helper scalars they
/// are built from. For side A, (first, second) = (a1, a2); for side B,
/// (first, second) = (b1, b2).
struct SpinorCoefficients {
    Complex first;
    Complex second;
    double K = 0.0;  ///< (q0/p0)^{1/2} / sqrt((q0 + 1)(p0 + 1))
    double C = 1.0;  ///< cosh(alpha_d / 2)
    double S = 0.0;  ///< sinh(alpha_d / 2)
};

/// Spinor components at detector-frame momentum `p` for a detector with
/// rapidity `alpha_d`, with q = Lambda^{-1} p:
///
///   a1 = K f(q) [C (q0 + 1) + S (qx + i qy)]    b1 = -K f(q) S qz
///   a2 = K f(q) S qz                            b2 =  K f(q) [C (q0 + 1) + S (qx - i qy)]
///
/// `packet` is the packet of the particle on `side` (B usually has k < 0).
SpinorCoefficients spinor_coefficients(Rapidity alpha_d, const FourMomentum& p,
                                       const wavepacket::PacketSpec& packet, Side side);

}  // namespace relbell::relkin
