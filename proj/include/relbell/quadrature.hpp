#pragma once

// Globally adaptive cubature over rectangles using a tensor-product
// Gauss-Kronrod (7, 15) rule. The region with the largest error estimate is
// bisected along the axis that contributes most of that error until the
// total estimate drops below rel_tol * |I| + abs_tol.

#include <cstddef>
#include <functional>

namespace relbell::quadrature {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Half-width of the truncated integration domain, in packet widths.
    double truncation_sigmas = 10.0;
    std::size_t max_subdivisions = 1'000'000;

    /// Throws DomainError on non-positive tolerances or truncation_sigmas < 6.
    void validate() const;
};

struct Rectangle {
    double x_lo, x_hi;
    double y_lo, y_hi;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t subdivisions = 0;
    std::size_t evaluations = 0;
};

using Integrand2D = std::function<double(double, double)>;

/// Integrates f(x, y) over `domain`. Throws ConvergenceError (carrying the
/// best estimate) if max_subdivisions is exhausted.
QuadratureResult integrate_2d(const Integrand2D& f, const Rectangle& domain,
                              const QuadratureConfig& cfg);

/// One application of the 15x15 Kronrod rule with its 7x7 Gauss companion,
/// without any subdivision. Exposed for testing the rule itself.
struct RuleEstimate {
    double kronrod = 0.0;
    double gauss = 0.0;
    double error_x = 0.0;  ///< |K x K - G x K|
    double error_y = 0.0;  ///< |K x K - K x G|
};
RuleEstimate apply_rule(const Integrand2D& f, const Rectangle& box);

}  // namespace relbell::quadrature
