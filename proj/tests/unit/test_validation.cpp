#include <gtest/gtest.h>

#include <sstream>

#include "relbell/validation.hpp"

namespace {

using namespace relbell::validation;

ValidationOptions quick() {
    ValidationOptions o;
    o.mc_samples = 50'000;
    o.sampler_shots = 50'000;
    return o;
}

TEST(Validation, DefaultChecksPassAndAreReproducible) {
    const auto first = run_validation(quick());
    ASSERT_GE(first.size(), 6u);
    for (const auto& c : first) EXPECT_TRUE(c.passed) << c.name << " worst=" << c.worst << " tol=" << c.tolerance;
    EXPECT_TRUE(all_passed(first));

    std::ostringstream a, b;
    write_table(a, first);
    write_table(b, run_validation(quick()));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_NE(a.str().find("PASS"), std::string::npos);
}

TEST(Validation, CorruptedTolerancesFailEveryCheck) {
    auto opts = quick();
    opts.corrupt_tolerances = true;
    const auto results = run_validation(opts);
    for (const auto& c : results) EXPECT_FALSE(c.passed) << c.name;
    EXPECT_FALSE(all_passed(results));
    std::ostringstream os;
    write_table(os, results);
    EXPECT_NE(os.str().find("FAIL"), std::string::npos);
}

}  // namespace
