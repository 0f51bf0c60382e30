#include <gtest/gtest.h>

#include <numbers>

#include "relbell/chsh.hpp"
#include "relbell/errors.hpp"

namespace {

using namespace relbell::chsh;

void expect_bracketed(const ThresholdResult& r, double tol) {
    EXPECT_LE(r.lo, r.parameter);
    EXPECT_LE(r.parameter, r.hi);
    EXPECT_LE(r.hi - r.lo, tol);
    EXPECT_GT(r.iterations, 0);
}

// Roots of V(alpha) = (1 - sqrt(0.8)) / 2 from an independent
// double-integral evaluation and bracketing root finder.
TEST(ThresholdRapidity, ReferenceRoots) {
    const auto slow = threshold_rapidity(PacketSpec{0.01, 4.0});
    expect_bracketed(slow, 1e-3);
    EXPECT_NEAR(slow.parameter, 1.1558721254, 1e-3);

    const auto fast = threshold_rapidity(PacketSpec{100.0, 4.0}, 1e-6);
    expect_bracketed(fast, 1e-6);
    EXPECT_NEAR(fast.parameter, 3.0615384746, 1e-6);
}

TEST(ThresholdRapidity, ValueAtRootMatchesBound) {
    const auto r = threshold_rapidity(PacketSpec{0.01, 4.0}, 1e-8);
    const double v = relbell::decoherence::decoherence_factor(Rapidity{r.parameter}, PacketSpec{0.01, 4.0}).value;
    EXPECT_NEAR(chsh_constrained(v, v, std::numbers::pi / 3), 2.0, 1e-7);
}

TEST(ThresholdRapidity, NarrowPacketNeverLosesViolation) {
    EXPECT_THROW(threshold_rapidity(PacketSpec{0.0, 0.1}), relbell::NotReachableError);
}

TEST(ThresholdRapidity, RejectsBadTolerance) {
    EXPECT_THROW(threshold_rapidity(PacketSpec{0.0, 4.0}, 0.0), relbell::DomainError);
    EXPECT_THROW(threshold_width(0.0, -1.0), relbell::DomainError);
}

TEST(ThresholdWidth, ReferenceRootsAndOrdering) {
    const auto slow = threshold_width(0.01);
    const auto fast = threshold_width(100.0);
    expect_bracketed(slow, 1e-3);
    expect_bracketed(fast, 1e-3);
    EXPECT_NEAR(slow.parameter, 0.8623731158, 1e-3);
    EXPECT_NEAR(fast.parameter, 0.3637334703, 1e-3);
    EXPECT_NEAR(slow.parameter, 0.87, 0.02);
    EXPECT_NEAR(fast.parameter, 0.37, 0.02);
    EXPECT_LT(fast.parameter, slow.parameter);
}

}  // namespace
