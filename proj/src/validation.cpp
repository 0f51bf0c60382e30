#include "relbell/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "relbell/chsh.hpp"
#include "relbell/decoherence.hpp"
#include "relbell/philox.hpp"

namespace relbell::validation {

namespace {

using decoherence::decoherence_factor;
using relkin::Rapidity;
using wavepacket::PacketSpec;

constexpr std::array<double, 3> kGridAlpha = {0.5, 2.0, 5.0};
constexpr std::array<double, 3> kGridK = {0.01, 1.0, 100.0};
constexpr std::array<double, 3> kGridW = {0.25, 1.0, 4.0};

CheckResult finish(std::string name, double worst, double tol, std::string metric, bool corrupt) {
    const double effective = corrupt ? -tol : tol;
    return CheckResult{std::move(name), worst <= effective, worst, effective, std::move(metric)};
}

CheckResult quadrature_vs_mc(const ValidationOptions& opts) {
    double worst = 0.0;
    std::uint64_t salt = 0;
    for (double a : kGridAlpha) {
        for (double k : kGridK) {
            for (double w : kGridW) {
                const PacketSpec packet{k, w};
                const double quad = decoherence_factor(Rapidity{a}, packet).value;
                const auto mc = decoherence::mc_decoherence_factor(
                    Rapidity{a}, packet, {opts.mc_samples, opts.seed + 7919 * ++salt});
                worst = std::max(worst, std::abs(quad - mc.estimate) / mc.std_error);
            }
        }
    }
    return finish("quadrature-vs-mc", worst, 4.0, "std errors", opts.corrupt_tolerances);
}

CheckResult quadrature_vs_analytic(const ValidationOptions& opts) {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        for (const auto& [k, w] : {std::pair{0.0, 0.01}, std::pair{0.01, 0.05}}) {
            const double quad = decoherence_factor(Rapidity{a}, PacketSpec{k, w}).value;
            const double analytic = decoherence::decoherence_factor_smallwidth(Rapidity{a}, w).value;
            worst = std::max(worst, std::abs(quad - analytic) / analytic);
        }
    }
    return finish("quadrature-vs-analytic (V)", worst, 1e-2, "relative", opts.corrupt_tolerances);
}

CheckResult analytic_f_agreement(const ValidationOptions& opts) {
    const double phi = std::numbers::pi / 3.0;
    const double v = decoherence_factor(Rapidity{1.0}, PacketSpec{0.0, 0.01}).value;
    const double quad = chsh::chsh_constrained(v, v, phi);
    const double analytic = chsh::chsh_smallwidth(Rapidity{1.0}, 0.01, phi);
    return finish("quadrature-vs-analytic (F, 1e-5)", std::abs(quad - analytic) / analytic, 1e-5, "relative",
                  opts.corrupt_tolerances);
}

CheckResult trace_oracle(const ValidationOptions& opts) {
    const random::CounterStream stream(opts.seed, 2);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto [v, w] = stream.uniforms(i, 0);
        const auto [t1, t2] = stream.uniforms(i, 1);
        const auto [t3, t4] = stream.uniforms(i, 2);
        const chsh::ChshSetting s{{kTwoPi * t1}, {kTwoPi * t2}, {kTwoPi * t3}, {kTwoPi * t4}};
        const auto state = chsh::reduced_density_matrix(0.5 * v, 0.5 * w);
        const double traced = std::abs(chsh::expectation(state, chsh::chsh_operator(s)));
        worst = std::max(worst, std::abs(traced - chsh::chsh_value(0.5 * v, 0.5 * w, s)));
    }
    return finish("trace-oracle equivalence", worst, 1e-12, "absolute", opts.corrupt_tolerances);
}

// Hermiticity and trace are held to 1e-12, the smallest eigenvalue to -1e-10;
// the reported figure is the largest fraction of those budgets used.
CheckResult tau_structure(const ValidationOptions& opts) {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const auto state = chsh::reduced_density_matrix(0.05 * i, 0.05 * j);
            const Eigen::Matrix4cd& m = state.matrix;
            const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(m).eigenvalues().minCoeff();
            worst = std::max({worst, (m - m.adjoint()).cwiseAbs().maxCoeff() / 1e-12,
                              std::abs(m.trace() - 1.0) / 1e-12, -min_eig / 1e-10});
        }
    }
    return finish("tau' hermitian/trace/psd", worst, 1.0, "budget fraction", opts.corrupt_tolerances);
}

CheckResult sampler_soundness(const ValidationOptions& opts) {
    double worst = 0.0;
    std::uint64_t salt = 0;
    for (const auto& [v, w] : {std::pair{0.0, 0.0}, std::pair{0.1, 0.2}, std::pair{0.05, 0.05}}) {
        const auto state = chsh::reduced_density_matrix(v, w);
        for (double dtheta : {0.0, std::numbers::pi / 3.0, std::numbers::pi / 2.0, 2.0}) {
            const chsh::Direction a{0.3};
            const chsh::Direction b{0.3 + dtheta};
            const auto est = chsh::sample_outcomes(state, a, b, opts.sampler_shots, opts.seed + 104729 * ++salt);
            const double exact = chsh::pair_expectation(v, w, a, b);
            const double sigma = std::max(est.std_error, 1.0 / static_cast<double>(opts.sampler_shots));
            worst = std::max(worst, std::abs(est.estimate - exact) / sigma);
        }
    }
    return finish("sampler soundness", worst, 4.0, "std errors", opts.corrupt_tolerances);
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& opts) {
    return {
        quadrature_vs_mc(opts), quadrature_vs_analytic(opts), analytic_f_agreement(opts),
        trace_oracle(opts),     tau_structure(opts),          sampler_soundness(opts),
    };
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void write_table(std::ostream& os, const std::vector<CheckResult>& results) {
    os << fmt::format("{:<34} {:<6} {:>12} {:>12}  {}\n", "check", "status", "worst", "tolerance", "metric");
    for (const auto& r : results) {
        os << fmt::format("{:<34} {:<6} {:>12.4e} {:>12.4e}  {}\n", r.name, r.passed ? "PASS" : "FAIL", r.worst,
                          r.tolerance, r.metric);
    }
    os << (all_passed(results) ? "all checks passed\n" : "one or more checks FAILED\n");
}

}  // namespace relbell::validation
