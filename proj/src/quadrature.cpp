#include "relbell/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "relbell/errors.hpp"

namespace relbell::quadrature {

namespace {

// Kronrod abscissae on [-1, 1], non-negative half; odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

// Gauss weights for kNodes[1], kNodes[3], kNodes[5], kNodes[7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Rule1D {
    std::array<double, 15> offsets{};
    std::array<double, 15> kronrod{};
    std::array<double, 15> gauss{};  // zero at Kronrod-only nodes
};

constexpr Rule1D make_rule() {
    Rule1D r{};
    for (int i = 0; i < 7; ++i) {
        r.offsets[i] = -kNodes[i];
        r.offsets[14 - i] = kNodes[i];
        r.kronrod[i] = r.kronrod[14 - i] = kKronrodWeights[i];
        if (i % 2 == 1) r.gauss[i] = r.gauss[14 - i] = kGaussWeights[i / 2];
    }
    r.offsets[7] = 0.0;
    r.kronrod[7] = kKronrodWeights[7];
    r.gauss[7] = kGaussWeights[3];
    return r;
}

constexpr Rule1D kRule = make_rule();

struct Region {
    Rectangle box;
    RuleEstimate estimate;

    double error() const { return std::abs(estimate.kronrod - estimate.gauss); }
};

struct ByError {
    bool operator()(const Region& a, const Region& b) const { return a.error() < b.error(); }
};

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("QuadratureConfig: tolerances must be > 0");
    }
    if (!(truncation_sigmas >= 6.0)) {
        throw DomainError("QuadratureConfig: truncation_sigmas must be >= 6");
    }
    if (max_subdivisions == 0) throw DomainError("QuadratureConfig: max_subdivisions must be > 0");
}

RuleEstimate apply_rule(const Integrand2D& f, const Rectangle& box) {
    const double cx = 0.5 * (box.x_lo + box.x_hi);
    const double hx = 0.5 * (box.x_hi - box.x_lo);
    const double cy = 0.5 * (box.y_lo + box.y_hi);
    const double hy = 0.5 * (box.y_hi - box.y_lo);

    std::array<double, 15> ys{};
    for (int j = 0; j < 15; ++j) ys[j] = cy + hy * kRule.offsets[j];

    double kk = 0.0, gk = 0.0, kg = 0.0, gg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double x = cx + hx * kRule.offsets[i];
        double row_k = 0.0, row_g = 0.0;
        for (int j = 0; j < 15; ++j) {
            const double v = f(x, ys[j]);
            row_k += kRule.kronrod[j] * v;
            row_g += kRule.gauss[j] * v;
        }
        kk += kRule.kronrod[i] * row_k;
        kg += kRule.kronrod[i] * row_g;
        gk += kRule.gauss[i] * row_k;
        gg += kRule.gauss[i] * row_g;
    }
    const double area = hx * hy;
    return RuleEstimate{kk * area, gg * area, std::abs(kk - gk) * area, std::abs(kk - kg) * area};
}

QuadratureResult integrate_2d(const Integrand2D& f, const Rectangle& domain,
                              const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(domain.x_hi > domain.x_lo) || !(domain.y_hi > domain.y_lo)) {
        throw DomainError("integrate_2d: empty or inverted rectangle");
    }

    std::priority_queue<Region, std::vector<Region>, ByError> heap;
    QuadratureResult out;

    Region root{domain, apply_rule(f, domain)};
    out.evaluations = 225;
    // Sums kept in long double; they are updated incrementally as regions split.
    long double total = root.estimate.kronrod;
    long double total_error = root.error();
    heap.push(root);

    const double min_width_x = 64.0 * std::numeric_limits<double>::epsilon() * (domain.x_hi - domain.x_lo);
    const double min_width_y = 64.0 * std::numeric_limits<double>::epsilon() * (domain.y_hi - domain.y_lo);

    while (static_cast<double>(total_error) >
           cfg.rel_tol * std::abs(static_cast<double>(total)) + cfg.abs_tol) {
        if (out.subdivisions >= cfg.max_subdivisions) {
            throw ConvergenceError("integrate_2d: max_subdivisions (" +
                                       std::to_string(cfg.max_subdivisions) + ") exhausted",
                                   static_cast<double>(total), static_cast<double>(total_error));
        }

        Region worst = heap.top();
        heap.pop();

        const bool split_x = worst.estimate.error_x >= worst.estimate.error_y;
        const Rectangle& b = worst.box;
        Rectangle lo = b, hi = b;
        if (split_x) {
            const double mid = 0.5 * (b.x_lo + b.x_hi);
            lo.x_hi = mid;
            hi.x_lo = mid;
        } else {
            const double mid = 0.5 * (b.y_lo + b.y_hi);
            lo.y_hi = mid;
            hi.y_lo = mid;
        }
        if ((split_x && lo.x_hi - lo.x_lo < min_width_x) || (!split_x && lo.y_hi - lo.y_lo < min_width_y)) {
            throw ConvergenceError("integrate_2d: roundoff limit reached before tolerance",
                                   static_cast<double>(total), static_cast<double>(total_error));
        }

        Region a{lo, apply_rule(f, lo)};
        Region c{hi, apply_rule(f, hi)};
        out.evaluations += 450;
        ++out.subdivisions;

        total += static_cast<long double>(a.estimate.kronrod) + c.estimate.kronrod - worst.estimate.kronrod;
        total_error += static_cast<long double>(a.error()) + c.error() - worst.error();
        heap.push(a);
        heap.push(c);
    }

    // Re-sum from the leaves so incremental drift does not leak into the result.
    long double value = 0.0L, error = 0.0L;
    while (!heap.empty()) {
        value += heap.top().estimate.kronrod;
        error += heap.top().error();
        heap.pop();
    }
    out.value = static_cast<double>(value);
    out.error = static_cast<double>(error);
    return out;
}

}  // namespace relbell::quadrature
