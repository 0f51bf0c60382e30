#pragma once

// Two-qubit spin state left after tracing out momenta, and the CHSH
// correlations measured on it. V and W enter as plain numbers; how they were
// computed (quadrature, ultra limit, analytic, Monte Carlo) is not this
// module's concern.

#include <cstdint>

#include <Eigen/Core>

#include "relbell/decoherence.hpp"

namespace relbell::chsh {

using relkin::Rapidity;
using wavepacket::PacketSpec;

/// Basis order |++>, |+->, |-+>, |--> with + = spin up along z.
struct ReducedSpinState {
    Eigen::Matrix4cd matrix;
    double v_factor = 0.0;
    double w_factor = 0.0;
    /// Set when V or W exceeds 1/2, outside the regime of physical packets.
    bool beyond_half = false;
};

/// Measurement direction in the plane orthogonal to the boost axis,
/// (0, cos theta, sin theta).
struct Direction {
    double theta = 0.0;

    Eigen::Vector3d unit() const;
    /// sigma . n
    Eigen::Matrix2cd pauli() const;
};

struct ChshSetting {
    Direction a1, a2, b1, b2;
};

struct ThresholdResult {
    double parameter = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
};

struct SampleEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Decoherence factor at which max_phi F(phi) = 2: (1 - 2V)^2 = 4/5.
double violation_threshold_v();

/// tau' = (rho1 x rho1' - rho2 x rho2' - rho3 x rho3' + rho4 x rho4') / 2.
/// Throws DomainError unless 0 <= V, W <= 1.
ReducedSpinState reduced_density_matrix(double V, double W);

/// tr(tau' (sigma.u) x (sigma.v)) in closed form: -(1-2V)(1-2W) cos(theta_u - theta_v).
double pair_expectation(double V, double W, const Direction& u, const Direction& v);

/// Expectation tr(state * op), real part.
double expectation(const ReducedSpinState& state, const Eigen::Matrix4cd& op);

/// C = (sigma.a2) x sigma.(b1 + b2) + (sigma.a1) x sigma.(b1 - b2).
Eigen::Matrix4cd chsh_operator(const ChshSetting& s);

/// |<C>| = (1-2V)(1-2W) |cos(a2-b1) + cos(a2-b2) + cos(a1-b1) - cos(a1-b2)|.
double chsh_value(double V, double W, const ChshSetting& s);

/// a2 = b1 family: (1-2V)(1-2W) |1 + 2 cos(phi) - cos(2 phi)|, phi in [0, 2 pi).
double chsh_constrained(double V, double W, double phi);

/// Narrow-packet closed form (1 - (w^2/4) tanh^2(|a|/2))^2 |1 + 2 cos phi - cos 2 phi|.
double chsh_smallwidth(Rapidity alpha, double w, double phi);

/// Local-hidden-variable bound |value| <= 2.
bool chsh_bound_check(double value);

/// Simulates n joint spin measurements along a (particle A) and b (particle B)
/// and returns the mean of the products of the +-1 outcomes with its
/// standard error. Deterministic given `seed`.
SampleEstimate sample_outcomes(const ReducedSpinState& state, const Direction& a, const Direction& b,
                               std::uint64_t n, std::uint64_t seed);

/// Rapidity where the Bell bound stops being violated for `packet`, found by
/// bisection of V(alpha) - violation_threshold_v() on [0, 30].
/// Throws NotReachableError if V(30) stays below the threshold.
ThresholdResult threshold_rapidity(const PacketSpec& packet, double tol = 1e-3,
                                   const quadrature::QuadratureConfig& cfg = {});

/// Width where the bound stops being violated for ultra-relativistic
/// detectors, by bisection of V_inf(w) on [0.01, 10].
ThresholdResult threshold_width(double k, double tol = 1e-3, const quadrature::QuadratureConfig& cfg = {});

}  // namespace relbell::chsh
