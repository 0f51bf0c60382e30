#include "relbell/chsh.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "relbell/errors.hpp"
#include "relbell/philox.hpp"

namespace relbell::chsh {

namespace {

Eigen::Matrix2cd block(double a00, double a01, double a10, double a11) {
    return (Eigen::Matrix2cd() << a00, a01, a10, a11).finished();
}

double constrained_factor(double phi) { return std::abs(1.0 + 2.0 * std::cos(phi) - std::cos(2.0 * phi)); }

}  // namespace

double violation_threshold_v() { return 0.5 * (1.0 - std::sqrt(0.8)); }

Eigen::Vector3d Direction::unit() const { return {0.0, std::cos(theta), std::sin(theta)}; }

Eigen::Matrix2cd Direction::pauli() const {
    return std::cos(theta) * relkin::pauli_y() + std::sin(theta) * relkin::pauli_z();
}

ReducedSpinState reduced_density_matrix(double V, double W) {
    if (!(V >= 0.0 && V <= 1.0) || !(W >= 0.0 && W <= 1.0)) {
        throw DomainError("reduced_density_matrix: V and W must lie in [0, 1]");
    }
    using Eigen::kroneckerProduct;
    const Eigen::Matrix2cd rho1 = block(1 - V, 0, 0, V);
    const Eigen::Matrix2cd rho1p = block(W, 0, 0, 1 - W);
    const Eigen::Matrix2cd rho2 = block(0, 1 - 3 * V, -V, 0);
    const Eigen::Matrix2cd rho2p = block(0, -W, 1 - 3 * W, 0);
    const Eigen::Matrix2cd rho3 = block(0, -V, 1 - 3 * V, 0);
    const Eigen::Matrix2cd rho3p = block(0, 1 - 3 * W, -W, 0);
    const Eigen::Matrix2cd rho4 = block(V, 0, 0, 1 - V);
    const Eigen::Matrix2cd rho4p = block(1 - W, 0, 0, W);

    ReducedSpinState out;
    out.matrix = 0.5 * (Eigen::Matrix4cd(kroneckerProduct(rho1, rho1p)) -
                        Eigen::Matrix4cd(kroneckerProduct(rho2, rho2p)) -
                        Eigen::Matrix4cd(kroneckerProduct(rho3, rho3p)) +
                        Eigen::Matrix4cd(kroneckerProduct(rho4, rho4p)));
    out.v_factor = V;
    out.w_factor = W;
    out.beyond_half = V > 0.5 || W > 0.5;
    return out;
}

double pair_expectation(double V, double W, const Direction& u, const Direction& v) {
    return -(1.0 - 2.0 * V) * (1.0 - 2.0 * W) * std::cos(u.theta - v.theta);
}

double expectation(const ReducedSpinState& state, const Eigen::Matrix4cd& op) {
    return (state.matrix * op).trace().real();
}

Eigen::Matrix4cd chsh_operator(const ChshSetting& s) {
    using Eigen::kroneckerProduct;
    const Eigen::Matrix2cd b_sum = s.b1.pauli() + s.b2.pauli();
    const Eigen::Matrix2cd b_diff = s.b1.pauli() - s.b2.pauli();
    return Eigen::Matrix4cd(kroneckerProduct(s.a2.pauli(), b_sum)) +
           Eigen::Matrix4cd(kroneckerProduct(s.a1.pauli(), b_diff));
}

double chsh_value(double V, double W, const ChshSetting& s) {
    const double a1 = s.a1.theta, a2 = s.a2.theta, b1 = s.b1.theta, b2 = s.b2.theta;
    const double bare =
        std::cos(a2 - b1) + std::cos(a2 - b2) + std::cos(a1 - b1) - std::cos(a1 - b2);
    return (1.0 - 2.0 * V) * (1.0 - 2.0 * W) * std::abs(bare);
}

double chsh_constrained(double V, double W, double phi) {
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
        throw DomainError("chsh_constrained: phi must lie in [0, 2 pi)");
    }
    return (1.0 - 2.0 * V) * (1.0 - 2.0 * W) * constrained_factor(phi);
}

double chsh_smallwidth(Rapidity alpha, double w, double phi) {
    const double t = std::tanh(0.5 * std::abs(alpha.value));
    const double f0 = 1.0 - 0.25 * w * w * t * t;
    return f0 * f0 * constrained_factor(phi);
}

bool chsh_bound_check(double value) { return std::abs(value) <= 2.0; }

SampleEstimate sample_outcomes(const ReducedSpinState& state, const Direction& a, const Direction& b,
                               std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("sample_outcomes: n must be >= 1");
    using Eigen::kroneckerProduct;

    // Outcome order (+,+), (+,-), (-,+), (-,-); sign of the product s_A s_B.
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const std::array<Eigen::Matrix2cd, 2> proj_a = {0.5 * (id + a.pauli()), 0.5 * (id - a.pauli())};
    const std::array<Eigen::Matrix2cd, 2> proj_b = {0.5 * (id + b.pauli()), 0.5 * (id - b.pauli())};
    std::array<double, 4> prob{};
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double p = expectation(state, Eigen::Matrix4cd(kroneckerProduct(proj_a[i], proj_b[j])));
            if (p < -1e-10) throw ConsistencyError("sample_outcomes: negative outcome probability");
            prob[2 * i + j] = std::max(p, 0.0);
            sum += p;
        }
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw ConsistencyError("sample_outcomes: outcome probabilities sum to " + std::to_string(sum));
    }
    // Outcomes 0 and 3 are the agreeing ones; u in [cut_agree, cut_disagree) disagrees.
    const double cut_agree = prob[0];
    const double cut_disagree = prob[0] + prob[1] + prob[2];

    // Each term (a.s_A)(b.s_B) = +-1/4, so (4/n) sum is the mean of +-1.
    const random::CounterStream stream(seed, 1);
    std::int64_t same = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = stream.uniforms(i, 0)[0];
        same += (u < cut_agree || u >= cut_disagree) ? 1 : -1;
    }
    const double nd = static_cast<double>(n);
    const double e = static_cast<double>(same) / nd;
    return SampleEstimate{e, std::sqrt(std::max(0.0, 1.0 - e * e) / nd)};
}

}  // namespace relbell::chsh
