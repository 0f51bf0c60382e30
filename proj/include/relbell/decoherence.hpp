#pragma once

// Decoherence factors V and W: the weight of the spin-flipped component that
// a moving detector sees after the momenta are traced out. Spin correlations
// are multiplied by (1 - 2V)(1 - 2W).
//
// Rapidity convention: decoherence_factor(alpha, packet) uses the boosted
// energy p0 = q0 cosh(alpha) - qx sinh(alpha). For a packet moving along +x,
// alpha > 0 is a detector receding along the packet's direction of motion.

#include <cstdint>

#include "relbell/quadrature.hpp"
#include "relbell/relkin.hpp"
#include "relbell/wavepacket.hpp"

namespace relbell::decoherence {

using quadrature::QuadratureConfig;
using relkin::Rapidity;
using wavepacket::PacketSpec;

struct DecoherenceFactor {
    double value = 0.0;
    /// Error estimate of `value` (zero for closed-form results).
    double error = 0.0;
};

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0x5eed;

    /// Throws DomainError when samples < 1000.
    void validate() const;
};

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Cylindrical integrand about the x axis:
///
///   G = qr^3 exp(-((qx - k)^2 + qr^2) / w^2)
///       / ((q0 + 1)(q0 cosh|a| - qx sinh|a| + 1))
///
/// with q0 = sqrt(qx^2 + qr^2 + 1). Throws DomainError for qr < 0.
double decoherence_integrand(double qx, double qr, double k, double w, Rapidity alpha);

/// V = sinh^2(a/2) / (sqrt(pi) w^3) * Int Int G dqx dqr by adaptive quadrature
/// on qx in [k - T w, k + T w], qr in [0, T w]. A negative rapidity is the
/// same as a positive one with the packet reflected (k -> -k).
DecoherenceFactor decoherence_factor(Rapidity alpha, const PacketSpec& packet,
                                     const QuadratureConfig& cfg = {});

/// alpha -> infinity limit (receding detector):
///
///   V_inf = 1 / (2 sqrt(pi) w^3) Int Int qr^3 exp(...) / ((q0 + 1)(q0 - qx))
DecoherenceFactor decoherence_factor_ultra(const PacketSpec& packet, const QuadratureConfig& cfg = {});

/// Leading small-width result (w << 1, k ~ 0): V = (w^2 / 8) tanh^2(|a| / 2).
DecoherenceFactor decoherence_factor_smallwidth(Rapidity alpha, double w);

/// Importance-sampled estimate drawing q from |f|^2:
///   V = sinh^2(a/2) E[qz^2 / ((q0 + 1)(p0 + 1))],  p0 = q0 cosh a - qx sinh a.
/// Deterministic for a given seed, independent of the number of threads.
McEstimate mc_decoherence_factor(Rapidity alpha, const PacketSpec& packet, const McConfig& mc);

/// Weight sinh^2(a/2) / (q0 cosh a - qx sinh a + 1) for a >= 0, evaluated
/// without overflow; a = +inf gives 1 / (2 (q0 - qx)).
double boost_weight(double a, double q0, double qx, double qr);

}  // namespace relbell::decoherence
