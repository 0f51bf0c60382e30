#pragma once

// Self-check suite run by `relbell validate`: quadrature against Monte Carlo
// and against the narrow-packet formula, trace-oracle equivalence of the CHSH
// factorisation, positivity of tau', and soundness of the outcome sampler.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace relbell::validation {

struct ValidationOptions {
    std::uint64_t seed = 20090315;
    std::uint64_t mc_samples = 200'000;
    std::uint64_t sampler_shots = 100'000;
    /// Debug aid: negates every tolerance so each check must fail.
    bool corrupt_tolerances = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Worst observed deviation, in the check's own units (see `metric`).
    double worst = 0.0;
    double tolerance = 0.0;
    std::string metric;
};

std::vector<CheckResult> run_validation(const ValidationOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// Fixed-width pass/fail table; byte-identical for identical results.
void write_table(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace relbell::validation
