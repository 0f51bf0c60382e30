#include "relbell/wavepacket.hpp"

#include <cmath>
#include <numbers>

#include "relbell/errors.hpp"

namespace relbell::wavepacket {

PacketSpec::PacketSpec(double k, double w) : k_(k), w_(w) {
    if (!std::isfinite(k)) throw DomainError("PacketSpec: mean momentum must be finite");
    if (!std::isfinite(w) || !(w > 0.0)) throw DomainError("PacketSpec: width must be finite and > 0");
}

double gaussian_amplitude(const FourMomentum& p, const PacketSpec& packet) {
    const double w = packet.w();
    const double dx = p.qx() - packet.k();
    const double r2 = dx * dx + p.qy() * p.qy() + p.qz() * p.qz();
    const double norm = std::pow(std::numbers::pi, -0.75) * std::pow(w, -1.5);
    return norm * std::exp(-r2 / (2.0 * w * w));
}

std::complex<double> singlet_amplitude(const FourMomentum& pA, const FourMomentum& pB, Spin sA,
                                       Spin sB, double kmag, double w) {
    double sign = 0.0;
    if (sA == Spin::Up && sB == Spin::Down) sign = 1.0;
    if (sA == Spin::Down && sB == Spin::Up) sign = -1.0;
    if (sign == 0.0) return {0.0, 0.0};

    const PacketSpec packet_a{std::abs(kmag), w};
    const PacketSpec packet_b = packet_a.mirrored();
    return {sign * (1.0 / std::numbers::sqrt2) * gaussian_amplitude(pA, packet_a) *
                gaussian_amplitude(pB, packet_b),
            0.0};
}

}  // namespace relbell::wavepacket
