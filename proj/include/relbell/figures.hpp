#pragma once

// F(phi) sweeps behind the rapidity and width figures, plus their CSV/JSON
// serialisation. One decoherence evaluation per curve, reused across phi.

#include <iosfwd>
#include <span>
#include <vector>

#include "relbell/quadrature.hpp"

namespace relbell::figures {

/// One point of an F(phi) curve. alpha = +inf marks the ultra-relativistic
/// limit.
struct SweepRecord {
    double phi = 0.0;
    double f = 0.0;
    double alpha = 0.0;
    double k = 0.0;
    double w = 0.0;
    double v = 0.0;
};

inline constexpr const char* kCsvHeader = "phi,f,alpha,k,w,v";
inline constexpr int kDefaultPhiPoints = 512;

/// `points` uniform samples of [0, 2 pi). Throws DomainError for points < 2.
std::vector<double> phi_grid(int points);

/// F(phi) for each rapidity at fixed packet (k, w), detectors receding with |alpha|.
std::vector<SweepRecord> rapidity_sweep(double k, double w, std::span<const double> alphas, int phi_points,
                                        const quadrature::QuadratureConfig& cfg = {});

/// F(phi) for ultra-relativistic detectors, one curve per width.
std::vector<SweepRecord> width_sweep(double k, std::span<const double> widths, int phi_points,
                                     const quadrature::QuadratureConfig& cfg = {});

/// Sorts by (alpha, w, phi), which is the (alpha, phi) order for a single width.
void sort_records(std::vector<SweepRecord>& records);

/// Header line then one row per record, every float with 17 significant digits.
void write_csv(std::ostream& os, std::span<const SweepRecord> records);

/// Array of objects with the CSV's fields; an infinite alpha is written as "inf".
void write_json(std::ostream& os, std::span<const SweepRecord> records);

/// 17-significant-digit rendering shared by all machine-readable outputs.
std::string format_real(double x);

}  // namespace relbell::figures
