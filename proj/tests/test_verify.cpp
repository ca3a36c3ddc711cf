#include <gtest/gtest.h>

#include <json.hpp>

#include "abh/boundary.hpp"
#include "abh/extremal.hpp"
#include "abh/poisson.hpp"
#include "abh/verify.hpp"

using namespace abh;

TEST(SuiteResult, Bookkeeping) {
    SuiteResult r;
    r.suite_name = "s";
    r.record({"a=1", 1.0, 2.0, false});
    r.record({"a=2", 2.0, 2.0, true});
    r.record({"a=3", 2.0 * (1.0 + 1e-9), 2.0, false});
    EXPECT_EQ(r.n_checks, 3);
    EXPECT_EQ(r.n_failures, 1);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0], "a=2");
    EXPECT_NEAR(r.worst_ratio, 1.0 + 1e-9, 1e-15);
    const auto j = nlohmann::json::parse(r.json());
    EXPECT_EQ(j.at("n_failures"), 1);
    EXPECT_FALSE(j.at("passed").get<bool>());
    EXPECT_EQ(r.csv().substr(0, 33), "suite,inputs,lhs,rhs,ratio,status");
}

TEST(Dfzp, HandExamples) {
    const ParamPair p(0.0, 0.0);
    // phi = 1: constant extension, zero derivative.
    EXPECT_NEAR(deriv_at(p, BoundaryFunction::named("one"), DiskPoint(Complex(0.3, 0.2))).norm(), 0.0, 1e-12);
    // phi = zeta at 0: lhs 1; C = Gamma(1)/Gamma^2(1) = 1 at q = 1, rhs = C * 2.
    EXPECT_NEAR(deriv_at(p, BoundaryFunction::named("zeta"), DiskPoint(0.0)).norm(), 1.0, 1e-13);
    EXPECT_NEAR(dfzp_constant(p, kInfP), 1.0, 1e-13);
    EXPECT_NEAR(dfzp_constant(p, 1.0), 4.0, 1e-13);
}

TEST(Dfzp, SuitePassesAndDominatesSharpConstant) {
    for (double e : {1.0, 2.0, kInfP}) {
        const SuiteResult r = check_dfzp(ParamPair({0.4, 0.3}, {0.2, -0.1}), e, 40, 5);
        EXPECT_TRUE(r.passed()) << r.json();
        EXPECT_LE(r.worst_ratio, 1.0);
    }
    for (const ParamPair& p : {ParamPair(0.0, 0.0), ParamPair(2.0, 0.5), ParamPair({0.3, 1.0}, -0.6)}) {
        EXPECT_GE(dfzp_constant(p, kInfP) * (p.lambda1() + p.lambda2()), d_infinity(p));
    }
}

TEST(HigherOrder, SuitePasses) {
    const SuiteResult r = check_higher_order(ParamPair(0.5, 0.5), 2.0, 2, 2, 24, 3);
    EXPECT_TRUE(r.passed()) << r.json();
    const SuiteResult zero = check_higher_order(ParamPair(0.5, 0.5), kInfP, 0, 0, 12, 3);
    EXPECT_TRUE(zero.passed()) << zero.json();
    EXPECT_THROW(check_higher_order(ParamPair(0.5, 0.5), 2.0, 4, 3, 1, 1), DepthError);
}

TEST(HigherOrder, FirstOrderConstantConsistentWithDfzp) {
    // Both first-order suites hold on the same samples.
    const ParamPair p({0.3, 0.2}, 0.1);
    EXPECT_TRUE(check_higher_order(p, kInfP, 1, 0, 16, 11).passed());
    EXPECT_TRUE(check_dfzp(p, kInfP, 16, 11).passed());
}

TEST(AlphaComparisons, GridAndExamples) {
    std::vector<double> grid;
    for (int i = -9; i <= 100; ++i) grid.push_back(std::round(i * 0.1 * 1e12) / 1e12);
    const SuiteResult r = check_alpha_comparisons(grid);
    EXPECT_TRUE(r.passed()) << r.json();
    EXPECT_NEAR(g_alpha(0.0), 1.0, 1e-12);
    EXPECT_NEAR(g_alpha(2.0), 0.5, 1e-13);
    const double ratio = std::pow(1.0 - 0.999 * 0.999, 0.5);
    EXPECT_NEAR(ratio, 0.0447102, 1e-6);
    const std::vector<double> bad{-1.0};
    EXPECT_THROW(check_alpha_comparisons(bad), DomainError);
}

TEST(TaHarmonic, SuitePassesWithOriginConstant) {
    EXPECT_NEAR(ta_origin_constant(0.0), 4.0 / kPi, 1e-14);
    for (double a : {0.0, 1.0}) {
        const SuiteResult r = check_ta_harmonic(a, 40, 9);
        EXPECT_TRUE(r.passed()) << r.json();
    }
    EXPECT_THROW(check_ta_harmonic(-1.0, 1, 1), DomainError);
}

TEST(Extremal, SuitePasses) {
    const SuiteResult r = check_extremal(ParamPair({0.1, 0.2}, 0.4), 1.0, 20, 3);
    EXPECT_TRUE(r.passed()) << r.json();
}

TEST(RunSuite, UnknownName) { EXPECT_THROW(run_suite("nope", 1, 1), DomainError); }
