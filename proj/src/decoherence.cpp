#include "relbell/decoherence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "relbell/errors.hpp"
#include "relbell/philox.hpp"

namespace relbell::decoherence {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrates the normalised V integrand in packet-width units u = (qx - k)/w,
// r = qr / w over [-T, T] x [0, T]; the Jacobian and Gaussian normalisation
// collapse to w^2 / sqrt(pi).
DecoherenceFactor integrate_factor(double a, double k, double w, const QuadratureConfig& cfg) {
    cfg.validate();
    const double prefactor = w * w / std::sqrt(std::numbers::pi);
    auto integrand = [=](double u, double r) {
        const double qx = k + w * u;
        const double qr = w * r;
        const double q0 = std::sqrt(1.0 + qx * qx + qr * qr);
        return prefactor * r * r * r * std::exp(-(u * u + r * r)) / (q0 + 1.0) *
               boost_weight(a, q0, qx, qr);
    };
    const double t = cfg.truncation_sigmas;
    const auto res = quadrature::integrate_2d(integrand, {-t, t, 0.0, t}, cfg);
    return DecoherenceFactor{std::max(res.value, 0.0), res.error};
}

struct BatchStats {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const BatchStats& other) {
        if (other.n == 0) return;
        const double na = static_cast<double>(n), nb = static_cast<double>(other.n);
        const double delta = other.mean - mean;
        n += other.n;
        mean += delta * nb / (na + nb);
        m2 += other.m2 + delta * delta * na * nb / (na + nb);
    }
};

constexpr std::uint64_t kBatchSize = 1u << 16;

}  // namespace

void McConfig::validate() const {
    if (samples < 1000) throw DomainError("McConfig: samples must be >= 1000");
}

double boost_weight(double a, double q0, double qx, double qr) {
    if (a == 0.0) return 0.0;
    // sinh^2(a/2) / (q0 cosh a - qx sinh a + 1)
    //   = (1 - sech a) / (2 (q0 - qx tanh a + sech a))
    const bool infinite = std::isinf(a);
    const double sech = infinite ? 0.0 : 1.0 / std::cosh(a);
    const double one_minus_sech = infinite ? 1.0 : (a < 1.0 ? 2.0 * std::pow(std::sinh(0.5 * a), 2) * sech
                                                            : 1.0 - sech);
    double denom;
    if (qx >= 0.0) {
        // q0 - qx tanh a = (q0 - qx) + qx (1 - tanh a), both terms non-negative.
        const double minus = (1.0 + qr * qr) / (q0 + qx);
        const double one_minus_tanh = infinite ? 0.0 : 2.0 / (std::exp(2.0 * a) + 1.0);
        denom = minus + qx * one_minus_tanh + sech;
    } else {
        denom = q0 - qx * (infinite ? 1.0 : std::tanh(a)) + sech;
    }
    return one_minus_sech / (2.0 * denom);
}

double decoherence_integrand(double qx, double qr, double k, double w, Rapidity alpha) {
    if (!(qr >= 0.0)) throw DomainError("decoherence_integrand: qr must be >= 0");
    if (!(w > 0.0)) throw DomainError("decoherence_integrand: w must be > 0");
    const double a = std::abs(alpha.value);
    const double q0 = std::sqrt(qx * qx + qr * qr + 1.0);
    const double dx = qx - k;
    const double gaussian = std::exp(-(dx * dx + qr * qr) / (w * w));
    return qr * qr * qr * gaussian / ((q0 + 1.0) * (q0 * std::cosh(a) - qx * std::sinh(a) + 1.0));
}

DecoherenceFactor decoherence_factor(Rapidity alpha, const PacketSpec& packet, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(alpha.value)) throw DomainError("decoherence_factor: rapidity must be finite");
    if (alpha.value == 0.0) return {};
    const double k = alpha.value > 0.0 ? packet.k() : -packet.k();
    return integrate_factor(std::abs(alpha.value), k, packet.w(), cfg);
}

DecoherenceFactor decoherence_factor_ultra(const PacketSpec& packet, const QuadratureConfig& cfg) {
    return integrate_factor(kInf, packet.k(), packet.w(), cfg);
}

DecoherenceFactor decoherence_factor_smallwidth(Rapidity alpha, double w) {
    const double t = std::tanh(0.5 * std::abs(alpha.value));
    return DecoherenceFactor{w * w / 8.0 * t * t, 0.0};
}

McEstimate mc_decoherence_factor(Rapidity alpha, const PacketSpec& packet, const McConfig& mc) {
    mc.validate();
    const double a = alpha.value;
    if (!(std::abs(a) <= 700.0)) throw DomainError("mc_decoherence_factor: |alpha| must be <= 700");
    if (a == 0.0) return {};

    const double sh2 = std::pow(std::sinh(0.5 * a), 2);
    const double ch = std::cosh(a);
    const double sh = std::sinh(a);
    const double sigma = packet.w() / std::numbers::sqrt2;  // |f|^2 is N(k, w^2/2) per axis
    const double k = packet.k();
    const random::CounterStream stream(mc.seed, 0);

    const std::uint64_t batches = (mc.samples + kBatchSize - 1) / kBatchSize;
    std::vector<BatchStats> stats(batches);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            BatchStats s;
            const std::uint64_t end = std::min(mc.samples, (b + 1) * kBatchSize);
            for (std::uint64_t i = b * kBatchSize; i < end; ++i) {
                const auto [z1, z2] = stream.normals(i, 0);
                const auto [z3, unused] = stream.normals(i, 1);
                (void)unused;
                const double qx = k + sigma * z1;
                const double qy = sigma * z2;
                const double qz = sigma * z3;
                const double q0 = std::sqrt(1.0 + qx * qx + qy * qy + qz * qz);
                const double p0 = q0 * ch - qx * sh;
                s.push(sh2 * qz * qz / ((q0 + 1.0) * (p0 + 1.0)));
            }
            stats[b] = s;
        }
    };

    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, std::thread::hardware_concurrency()), batches));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    BatchStats total;
    for (const auto& s : stats) total.merge(s);
    const double n = static_cast<double>(total.n);
    const double variance = total.m2 / (n - 1.0);
    return McEstimate{total.mean, std::sqrt(variance / n)};
}

}  // namespace relbell::decoherence
