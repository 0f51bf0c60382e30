#include <cmath>
#include <functional>
#include <string>

#include "relbell/chsh.hpp"
#include "relbell/errors.hpp"

namespace relbell::chsh {

namespace {

// Bisection for the sign change of g on [lo, hi], where g(lo) < 0 <= g(hi).
ThresholdResult bisect(const std::function<double(double)>& g, double lo, double hi, double tol) {
    ThresholdResult out;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++out.iterations;
    }
    out.lo = lo;
    out.hi = hi;
    out.parameter = 0.5 * (lo + hi);
    return out;
}

void check_tol(double tol) {
    if (!(tol > 0.0)) throw DomainError("threshold: tol must be > 0");
}

}  // namespace

ThresholdResult threshold_rapidity(const PacketSpec& packet, double tol, const quadrature::QuadratureConfig& cfg) {
    check_tol(tol);
    constexpr double kLo = 0.0;
    constexpr double kHi = 30.0;
    const double target = violation_threshold_v();
    auto g = [&](double alpha) {
        return decoherence::decoherence_factor(Rapidity{alpha}, packet, cfg).value - target;
    };
    if (g(kHi) < 0.0) {
        throw NotReachableError("threshold_rapidity: V(alpha = 30) stays below " + std::to_string(target) +
                                "; the Bell inequality is violated for every rapidity");
    }
    return bisect(g, kLo, kHi, tol);
}

ThresholdResult threshold_width(double k, double tol, const quadrature::QuadratureConfig& cfg) {
    check_tol(tol);
    constexpr double kLo = 0.01;
    constexpr double kHi = 10.0;
    const double target = violation_threshold_v();
    auto g = [&](double w) {
        return decoherence::decoherence_factor_ultra(PacketSpec{k, w}, cfg).value - target;
    };
    if (g(kLo) >= 0.0 || g(kHi) < 0.0) {
        throw NotReachableError("threshold_width: no sign change of V_inf(w) - " + std::to_string(target) +
                                " on [0.01, 10]");
    }
    return bisect(g, kLo, kHi, tol);
}

}  // namespace relbell::chsh
