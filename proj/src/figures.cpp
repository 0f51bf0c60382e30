#include "relbell/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <tuple>

#include <fmt/format.h>

#include "relbell/chsh.hpp"
#include "relbell/decoherence.hpp"
#include "relbell/errors.hpp"

namespace relbell::figures {

namespace {

void append_curve(std::vector<SweepRecord>& out, const std::vector<double>& phis, double alpha, double k,
                  double w, double v) {
    for (double phi : phis) {
        out.push_back(SweepRecord{phi, chsh::chsh_constrained(v, v, phi), alpha, k, w, v});
    }
}

}  // namespace

std::vector<double> phi_grid(int points) {
    if (points < 2) throw DomainError("phi_grid: need at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = 2.0 * std::numbers::pi / points;
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = i * step;
    return grid;
}

std::vector<SweepRecord> rapidity_sweep(double k, double w, std::span<const double> alphas, int phi_points,
                                        const quadrature::QuadratureConfig& cfg) {
    const auto phis = phi_grid(phi_points);
    const wavepacket::PacketSpec packet{k, w};
    std::vector<SweepRecord> out;
    out.reserve(alphas.size() * phis.size());
    for (double alpha : alphas) {
        const double v = decoherence::decoherence_factor(relkin::Rapidity{std::abs(alpha)}, packet, cfg).value;
        append_curve(out, phis, alpha, k, w, v);
    }
    sort_records(out);
    return out;
}

std::vector<SweepRecord> width_sweep(double k, std::span<const double> widths, int phi_points,
                                     const quadrature::QuadratureConfig& cfg) {
    const auto phis = phi_grid(phi_points);
    std::vector<SweepRecord> out;
    out.reserve(widths.size() * phis.size());
    for (double w : widths) {
        const double v = decoherence::decoherence_factor_ultra(wavepacket::PacketSpec{k, w}, cfg).value;
        append_curve(out, phis, std::numeric_limits<double>::infinity(), k, w, v);
    }
    sort_records(out);
    return out;
}

void sort_records(std::vector<SweepRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.alpha, a.w, a.phi) < std::tie(b.alpha, b.w, b.phi);
    });
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

void write_csv(std::ostream& os, std::span<const SweepRecord> records) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        os << format_real(r.phi) << ',' << format_real(r.f) << ',' << format_real(r.alpha) << ','
           << format_real(r.k) << ',' << format_real(r.w) << ',' << format_real(r.v) << '\n';
    }
}

void write_json(std::ostream& os, std::span<const SweepRecord> records) {
    // Numbers are emitted through format_real so both formats carry the same digits.
    os << "[";
    bool first = true;
    for (const auto& r : records) {
        os << (first ? "\n" : ",\n");
        first = false;
        const std::string alpha = std::isinf(r.alpha) ? std::string("\"inf\"") : format_real(r.alpha);
        os << "  {\"phi\": " << format_real(r.phi) << ", \"f\": " << format_real(r.f) << ", \"alpha\": " << alpha
           << ", \"k\": " << format_real(r.k) << ", \"w\": " << format_real(r.w) << ", \"v\": " << format_real(r.v)
           << "}";
    }
    os << (first ? "]\n" : "\n]\n");
}

}  // namespace relbell::figures
