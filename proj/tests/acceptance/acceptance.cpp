// Release acceptance checks. One PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cli.hpp"
#include "relbell/chsh.hpp"
#include "relbell/decoherence.hpp"
#include "relbell/figures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace relbell;
using std::numbers::pi;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail, double seconds) {
    if (!ok) ++failures;
    std::printf("%s  %-28s %s  [%.1f s]\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
}

template <class F>
void criterion(const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(ok, name, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Extracts a numeric field from the one-object JSON record printed by `sample`.
double json_field(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) throw std::runtime_error("missing field " + key);
    return std::stod(text.substr(text.find(':', pos) + 1));
}

bool rapidity_thresholds(std::string& detail) {
    const double slow = chsh::threshold_rapidity(wavepacket::PacketSpec{0.01, 4.0}).parameter;
    const double fast = chsh::threshold_rapidity(wavepacket::PacketSpec{100.0, 4.0}).parameter;
    detail = fmt("alpha*(k=0.01,w=4)=%.4f want [1.37,1.41]; alpha*(k=100,w=4)=%.4f want [3.10,3.14]", slow, fast);
    return slow >= 1.37 && slow <= 1.41 && fast >= 3.10 && fast <= 3.14;
}

bool width_thresholds(std::string& detail) {
    const double slow = chsh::threshold_width(0.01).parameter;
    const double fast = chsh::threshold_width(100.0).parameter;
    detail = fmt("w*(k=0.01)=%.4f want [0.85,0.89]; w*(k=100)=%.4f want [0.35,0.39]", slow, fast);
    return slow >= 0.85 && slow <= 0.89 && fast >= 0.35 && fast <= 0.39;
}

bool analytic_agreement(std::string& detail) {
    const relkin::Rapidity alpha{1.0};
    const double v = decoherence::decoherence_factor(alpha, wavepacket::PacketSpec{0.0, 0.01}).value;
    const double quad = chsh::chsh_constrained(v, v, pi / 3);
    const double analytic = chsh::chsh_smallwidth(alpha, 0.01, pi / 3);
    const double rel = std::abs(quad - analytic) / analytic;
    detail = fmt("F_quad=%.15f F_analytic=%.15f rel=%.2e want <= 1e-5", quad, analytic, rel);
    return rel <= 1e-5;
}

bool monte_carlo_triangle(std::string& detail) {
    double worst = 0.0;
    std::string where;
    for (double a : {0.5, 2.0, 5.0})
        for (double k : {0.01, 1.0, 100.0})
            for (double w : {0.25, 1.0, 4.0}) {
                const wavepacket::PacketSpec packet{k, w};
                const auto mc = decoherence::mc_decoherence_factor(relkin::Rapidity{a}, packet,
                                                                   decoherence::McConfig{10'000'000, 20090315});
                const double quad = decoherence::decoherence_factor(relkin::Rapidity{a}, packet).value;
                const double z = std::abs(mc.estimate - quad) / mc.std_error;
                if (z > worst) {
                    worst = z;
                    where = fmt("(alpha=%g,k=%g,w=%g)", a, k, w);
                }
            }
    detail = fmt("27 points, N=1e7, worst |MC-quad|/se=%.2f at %s, want <= 3", worst, where.c_str());
    return worst <= 3.0;
}

bool exact_limits(std::string& detail) {
    const double peak = chsh::chsh_constrained(0, 0, pi / 3);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dec(0.0, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double V = dec(rng), W = dec(rng);
        const auto f = [&](const std::vector<double>& t) {
            return chsh::chsh_value(V, W, chsh::ChshSetting{{t[0]}, {t[1]}, {t[2]}, {t[3]}});
        };
        const double best = testing::nelder_mead_max(f, 4, 8, 1000 + static_cast<std::uint64_t>(i), pi);
        worst = std::max(worst, std::abs(best - 2 * std::numbers::sqrt2 * (1 - 2 * V) * (1 - 2 * W)));
    }
    detail = fmt("|F(0,0,pi/3)-2.5|=%.1e want <= 1e-12; 10 random (V,W) max |NM-2sqrt2(1-2V)(1-2W)|=%.1e want <= 1e-6",
                 std::abs(peak - 2.5), worst);
    return std::abs(peak - 2.5) <= 1e-12 && worst <= 1e-6;
}

bool state_structure(std::string& detail) {
    double herm = 0, trace = 0, min_eig = 1;
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const auto s = chsh::reduced_density_matrix(0.05 * i, 0.05 * j);
            herm = std::max(herm, (s.matrix - s.matrix.adjoint()).cwiseAbs().maxCoeff());
            trace = std::max(trace, std::abs(s.matrix.trace() - 1.0));
            min_eig = std::min(min_eig, Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(s.matrix).eigenvalues().minCoeff());
        }
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> ang(0.0, 2 * pi), dec(0.0, 0.5);
    double oracle = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double V = dec(rng), W = dec(rng);
        const chsh::ChshSetting s{{ang(rng)}, {ang(rng)}, {ang(rng)}, {ang(rng)}};
        const double traced = std::abs(chsh::expectation(chsh::reduced_density_matrix(V, W), chsh::chsh_operator(s)));
        oracle = std::max(oracle, std::abs(traced - chsh::chsh_value(V, W, s)));
    }
    detail = fmt("grid step 0.05: max|tau-tau^H|=%.1e |tr-1|=%.1e min eig=%.1e; trace oracle max diff=%.1e", herm, trace,
                 min_eig, oracle);
    return herm <= 1e-12 && trace <= 1e-12 && min_eig >= -1e-10 && oracle <= 1e-12;
}

bool sampler_statistics(std::string& detail) {
    const std::string theta_b = fmt("%.17g", pi / 3);
    const char* argv[] = {"relbell", "sample", "--alpha", "2", "--w", "4", "--k", "0.01", "--theta-a", "0",
                          "--theta-b", theta_b.c_str(), "--n", "1000000", "--seed", "7", "--format", "json"};
    const int argc = static_cast<int>(std::size(argv));
    std::ostringstream out1, out2, err;
    const int c1 = cli::run(argc, argv, out1, err);
    const int c2 = cli::run(argc, argv, out2, err);
    if (c1 != 0 || c2 != 0) {
        detail = "sample exited nonzero: " + err.str();
        return false;
    }
    const double e = json_field(out1.str(), "estimate");
    const double se = json_field(out1.str(), "std_error");
    const double v = json_field(out1.str(), "v");
    const double prediction = -(1 - 2 * v) * (1 - 2 * v) * 0.5;
    const double z = std::abs(e - prediction) / se;
    const bool same = out1.str() == out2.str();
    detail = fmt("E=%.6f prediction=%.6f |z|=%.2f want <= 4; repeat identical=%s", e, prediction, z, same ? "yes" : "no");
    return z <= 4.0 && same;
}

bool non_violation(std::string& detail) {
    const double alphas[] = {1.5};
    const auto recs = figures::rapidity_sweep(0.01, 4.0, alphas, figures::kDefaultPhiPoints);
    double peak = 0.0;
    for (const auto& r : recs) peak = std::max(peak, r.f);
    detail = fmt("alpha=1.5, k=0.01, w=4: max over 512 phi of F=%.6f want < 2", peak);
    return peak < 2.0;
}

}  // namespace

int main() {
    criterion("rapidity-thresholds", rapidity_thresholds);
    criterion("width-thresholds", width_thresholds);
    criterion("analytic-agreement", analytic_agreement);
    criterion("monte-carlo-triangle", monte_carlo_triangle);
    criterion("exact-limits", exact_limits);
    criterion("state-structure", state_structure);
    criterion("sampler-statistics", sampler_statistics);
    criterion("non-violation", non_violation);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
