#pragma once

// Gaussian momentum-space packets and the two-particle spin singlet built from
// them. Amplitudes are evaluated on demand; nothing is stored on a grid.

#include <complex>

#include "relbell/relkin.hpp"

namespace relbell::wavepacket {

using relkin::FourMomentum;

/// Gaussian packet centred on (k, 0, 0) with width w (both in units of m).
/// Particle A conventionally carries +|k|, particle B -|k|.
class PacketSpec {
public:
    /// Throws DomainError unless w > 0 and both values are finite.
    PacketSpec(double k, double w);

    double k() const noexcept { return k_; }
    double w() const noexcept { return w_; }

    /// Same width, mean momentum reflected through the origin.
    PacketSpec mirrored() const { return PacketSpec{-k_, w_}; }

private:
    double k_;
    double w_;
};

enum class Spin { Up, Down };

/// +1/2 for Up, -1/2 for Down.
constexpr double spin_projection(Spin s) { return s == Spin::Up ? 0.5 : -0.5; }

/// pi^{-3/4} w^{-3/2} exp(-((px - k)^2 + py^2 + pz^2) / (2 w^2))
double gaussian_amplitude(const FourMomentum& p, const PacketSpec& packet);

/// Singlet coefficient psi_{sA sB}(pA, pB) with particle A centred at +kmag
/// and particle B at -kmag.
std::complex<double> singlet_amplitude(const FourMomentum& pA, const FourMomentum& pB, Spin sA,
                                       Spin sB, double kmag, double w);

}  // namespace relbell::wavepacket
