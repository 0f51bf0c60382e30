#pragma once

// Test-only reference machinery, deliberately independent of the library's
// numerical paths: fixed composite Gauss-Legendre grids (nodes generated here
// by Newton iteration, not taken from the Kronrod tables) and a Nelder-Mead
// maximiser.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace relbell::testing {

struct Node {
    double x;
    double weight;
};

/// n-point Gauss-Legendre rule on [-1, 1].
inline std::vector<Node> gauss_legendre(int n) {
    std::vector<Node> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        out[static_cast<std::size_t>(i)] = Node{x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return out;
}

/// Composite rule: `panels` equal panels of an `order`-point Gauss-Legendre rule.
inline std::vector<Node> composite_grid(double lo, double hi, int panels, int order) {
    const auto base = gauss_legendre(order);
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(panels * order));
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = lo + (p + 0.5) * h;
        for (const auto& n : base) out.push_back({c + 0.5 * h * n.x, 0.5 * h * n.weight});
    }
    return out;
}

/// Maximises f over R^d by multi-start Nelder-Mead; returns the best value.
inline double nelder_mead_max(const std::function<double(const std::vector<double>&)>& f, int dim, int starts,
                              std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-scale, scale);
    double best = -1e300;
    for (int s = 0; s < starts; ++s) {
        std::vector<std::vector<double>> simplex(static_cast<std::size_t>(dim + 1), std::vector<double>(dim));
        for (auto& v : simplex)
            for (auto& c : v) c = uni(rng);
        std::vector<double> vals(simplex.size());
        auto neg = [&](const std::vector<double>& x) { return -f(x); };
        for (std::size_t i = 0; i < simplex.size(); ++i) vals[i] = neg(simplex[i]);

        for (int iter = 0; iter < 20000; ++iter) {
            std::vector<std::size_t> idx(simplex.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
            const std::size_t lo = idx.front(), hi = idx.back(), second = idx[idx.size() - 2];
            if (std::abs(vals[hi] - vals[lo]) < 1e-15) break;

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i : idx)
                if (i != hi)
                    for (int d = 0; d < dim; ++d) centroid[d] += simplex[i][d] / dim;
            auto along = [&](double t) {
                std::vector<double> x(dim);
                for (int d = 0; d < dim; ++d) x[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
                return x;
            };
            const auto xr = along(-1.0);
            const double fr = neg(xr);
            if (fr < vals[lo]) {
                const auto xe = along(-2.0);
                const double fe = neg(xe);
                if (fe < fr) {
                    simplex[hi] = xe;
                    vals[hi] = fe;
                } else {
                    simplex[hi] = xr;
                    vals[hi] = fr;
                }
            } else if (fr < vals[second]) {
                simplex[hi] = xr;
                vals[hi] = fr;
            } else {
                const auto xc = along(0.5);
                const double fc = neg(xc);
                if (fc < vals[hi]) {
                    simplex[hi] = xc;
                    vals[hi] = fc;
                } else {
                    for (std::size_t i : idx) {
                        if (i == lo) continue;
                        for (int d = 0; d < dim; ++d) simplex[i][d] = 0.5 * (simplex[i][d] + simplex[lo][d]);
                        vals[i] = neg(simplex[i]);
                    }
                }
            }
        }
        best = std::max(best, -*std::min_element(vals.begin(), vals.end()));
    }
    return best;
}

}  // namespace relbell::testing
