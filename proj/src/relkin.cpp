#include "relbell/relkin.hpp"

#include <cmath>
#include <string>

#include "relbell/errors.hpp"

namespace relbell::relkin {

double velocity_from(Rapidity alpha) { return -std::tanh(alpha.value); }

Rapidity rapidity_from_velocity(double v) {
    if (!std::isfinite(v) || std::abs(v) >= 1.0) {
        throw DomainError("rapidity_from_velocity: |v| must be < 1 (superluminal detector), got " +
                          std::to_string(v));
    }
    return Rapidity{-std::atanh(v)};
}

FourMomentum FourMomentum::on_shell(double qx, double qy, double qz) {
    if (!std::isfinite(qx) || !std::isfinite(qy) || !std::isfinite(qz)) {
        throw DomainError("FourMomentum: non-finite spatial component");
    }
    const double q0 = std::sqrt(1.0 + qx * qx + qy * qy + qz * qz);
    return FourMomentum{q0, qx, qy, qz};
}

FourMomentum FourMomentum::from_components(double q0, double qx, double qy, double qz) {
    const FourMomentum shell = on_shell(qx, qy, qz);
    if (!std::isfinite(q0) || std::abs(q0 - shell.q0_) > 1e-12 * shell.q0_) {
        throw DomainError("FourMomentum: components are off the mass shell");
    }
    return FourMomentum{q0, qx, qy, qz};
}

double FourMomentum::light_cone_plus() const noexcept {
    return qx_ >= 0.0 ? q0_ + qx_ : transverse_mass_sq() / (q0_ - qx_);
}

double FourMomentum::light_cone_minus() const noexcept {
    return qx_ <= 0.0 ? q0_ - qx_ : transverse_mass_sq() / (q0_ + qx_);
}

// Light-cone components scale as e^{+a} and e^{-a} under the boost, which
// keeps q0 free of cancellation when q0 cosh a and qx sinh a nearly cancel.
FourMomentum LorentzBoost::apply(const FourMomentum& p) const {
    const double a = alpha.value;
    if (a == 0.0) return p;
    const double plus = p.light_cone_plus() * std::exp(a);
    const double minus = p.light_cone_minus() * std::exp(-a);
    const double q0 = 0.5 * (plus + minus);
    const double qx = 0.5 * (plus - minus);
    if (!std::isfinite(q0)) {
        throw DomainError("LorentzBoost: boosted energy overflows double precision");
    }
    return FourMomentum::on_shell(qx, p.qy(), p.qz());
}

Eigen::Matrix4d LorentzBoost::matrix() const {
    const double c = std::cosh(alpha.value);
    const double s = std::sinh(alpha.value);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

FourMomentum apply_boost(const LorentzBoost& boost, const FourMomentum& p) { return boost.apply(p); }

const Eigen::Matrix2cd& pauli_x() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    return m;
}

const Eigen::Matrix2cd& pauli_y() {
    static const Eigen::Matrix2cd m =
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    return m;
}

const Eigen::Matrix2cd& pauli_z() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    return m;
}

WignerMatrix wigner_matrix(Rapidity alpha_d, const FourMomentum& p) {
    const double a = alpha_d.value;
    if (a == 0.0) return WignerMatrix{Eigen::Matrix2cd::Identity()};

    const double ch = std::cosh(0.5 * a);
    const double sh = std::sinh(0.5 * a);
    const FourMomentum boosted = LorentzBoost{alpha_d}.apply(p);

    // (p0 + 1) cosh(a/2) + px sinh(a/2), written with positive light-cone terms.
    const double scalar =
        0.5 * (std::exp(0.5 * a) * p.light_cone_plus() + std::exp(-0.5 * a) * p.light_cone_minus()) + ch;
    const double norm = std::sqrt((p.q0() + 1.0) * (boosted.q0() + 1.0));

    // i eps^{xij} p_i sigma_j = i (py sigma_z - pz sigma_y)
    const Eigen::Matrix2cd rotation = p.qy() * pauli_z() - p.qz() * pauli_y();
    const Eigen::Matrix2cd d =
        (scalar * Eigen::Matrix2cd::Identity() + Complex(0.0, sh) * rotation) / norm;
    return WignerMatrix{d};
}

}  // namespace relbell::relkin
