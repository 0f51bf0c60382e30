#pragma once

// Lorentz kinematics for boosts along x and the Wigner rotation they induce
// on spin-1/2 momentum eigenstates. All momenta are in units of the particle
// mass (m = 1).

#include <complex>

#include <Eigen/Core>

namespace relbell::relkin {

using Complex = std::complex<double>;

/// Boost rapidity along x. Sign convention: a detector moving with velocity
/// +v along x has rapidity -atanh(v).
struct Rapidity {
    double value = 0.0;

    constexpr Rapidity() = default;
    constexpr explicit Rapidity(double alpha) : value(alpha) {}

    constexpr Rapidity operator-() const { return Rapidity{-value}; }
};

/// Velocity of the detector whose frame is reached by `alpha`.
double velocity_from(Rapidity alpha);

/// -atanh(v). Throws DomainError for |v| >= 1.
Rapidity rapidity_from_velocity(double v);

/// On-shell four-momentum (q0, qx, qy, qz) with q0 = sqrt(1 + |q|^2).
class FourMomentum {
public:
    /// Particle at rest.
    FourMomentum() = default;

    /// Builds the on-shell momentum for the given spatial components.
    static FourMomentum on_shell(double qx, double qy, double qz);

    /// Builds from all four components, checking the mass shell to 1e-12
    /// relative. Throws DomainError otherwise.
    static FourMomentum from_components(double q0, double qx, double qy, double qz);

    double q0() const noexcept { return q0_; }
    double qx() const noexcept { return qx_; }
    double qy() const noexcept { return qy_; }
    double qz() const noexcept { return qz_; }

    /// 1 + qy^2 + qz^2, the squared transverse mass.
    double transverse_mass_sq() const noexcept { return 1.0 + qy_ * qy_ + qz_ * qz_; }

    /// q0 + qx and q0 - qx, each evaluated without cancellation.
    double light_cone_plus() const noexcept;
    double light_cone_minus() const noexcept;

private:
    FourMomentum(double q0, double qx, double qy, double qz)
        : q0_(q0), qx_(qx), qy_(qy), qz_(qz) {}

    double q0_ = 1.0;
    double qx_ = 0.0;
    double qy_ = 0.0;
    double qz_ = 0.0;
};

/// Pure boost along x.
struct LorentzBoost {
    Rapidity alpha;

    LorentzBoost inverse() const { return LorentzBoost{-alpha}; }

    /// (q0 cosh a + qx sinh a, qx cosh a + q0 sinh a, qy, qz).
    FourMomentum apply(const FourMomentum& p) const;

    /// The 4x4 matrix acting on (q0, qx, qy, qz).
    Eigen::Matrix4d matrix() const;
};

FourMomentum apply_boost(const LorentzBoost& boost, const FourMomentum& p);

/// 2x2 SU(2) spin rotation D(Lambda, p).
struct WignerMatrix {
    Eigen::Matrix2cd entries;

    Complex operator()(int row, int col) const { return entries(row, col); }
};

/// Wigner rotation induced on a spin-1/2 state of momentum `p` by the x boost
/// with rapidity `alpha_d`:
///
///   D = [(p0 + 1) cosh(a/2) I + (px I + i eps^{xij} p_i sigma_j) sinh(a/2)]
///       / sqrt((p0 + 1)((Lambda p)0 + 1))
///
/// with eps^{xyz} = +1.
WignerMatrix wigner_matrix(Rapidity alpha_d, const FourMomentum& p);

/// Pauli matrices sigma^x, sigma^y, sigma^z.
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();

}  // namespace relbell::relkin
