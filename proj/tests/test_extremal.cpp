#include <gtest/gtest.h>

#include "abh/extremal.hpp"
#include "abh/poisson.hpp"
#include "abh/rng.hpp"
#include "abh/special_fn.hpp"

using namespace abh;

namespace {
const double kFourOverPi = 4.0 / kPi;

ParamPair random_params(RandomStream& rng) {
    return ParamPair({rng.uniform(-0.45, 2.0), rng.uniform(-1.0, 1.0)}, {rng.uniform(-0.45, 2.0), rng.uniform(-1.0, 1.0)});
}
}  // namespace

TEST(SharpConstant, HarmonicCase) {
    const ParamPair p(0.0, 0.0);
    EXPECT_NEAR(sharp_constant_origin(p, kInfP), kFourOverPi, 1e-11);
    EXPECT_NEAR(d_infinity(p), kFourOverPi, 1e-14);
    EXPECT_NEAR(sharp_constant_origin(p, 2.0), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(sharp_constant_origin(p, 1.0), 2.0, 1e-15);
}

TEST(SharpConstant, HighPrecisionValues) {
    EXPECT_NEAR(sharp_constant_origin(ParamPair(0.3, -0.2), 4.0), 1.6064460960209882654, 1e-11);
    const ParamPair p(1.0, Complex(0.5, 0.5));
    EXPECT_NEAR(d_infinity(p), 1.4719179110316537306, 1e-12);
    EXPECT_NEAR(sharp_constant_origin(p, kInfP), 1.4719179110316537306, 1e-11);
}

TEST(SharpConstant, SymmetricFamilyOriginConstant) {
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const double want = 2.0 * (a + 2.0) * std::pow(gamma_fn(0.5 * a + 1.0).real(), 2) / (kPi * gamma_fn(a + 1.0).real());
        EXPECT_NEAR(d_infinity(ParamPair(0.5 * a, 0.5 * a)), want, 1e-12);
    }
}

TEST(SharpConstant, EqualLambdasUseEndpoint) {
    const ParamPair p(0.7, 0.7);
    const double want = 2.0 * std::abs(c_coef(p)) * 2.0 * p.lambda1() / kPi;
    EXPECT_NEAR(d_infinity(p), want, 1e-13);
}

TEST(SharpConstant, EllipticIdentity) {
    RandomStream rng(41, 0);
    for (int i = 0; i < 100; ++i) {
        const double l1 = rng.uniform(1e-3, 5.0);
        const double l2 = rng.uniform(1e-3, 5.0);
        const double quad = 2.0 * kPi * k_symbol_mean(l1, l2, 1.0);
        const double closed = 4.0 * (l1 + l2) * ellint_E(2.0 * std::sqrt(l1 * l2) / (l1 + l2));
        EXPECT_NEAR(quad, closed, 1e-9);
    }
}

TEST(SharpConstant, NonincreasingInP) {
    RandomStream rng(42, 0);
    for (int i = 0; i < 10; ++i) {
        const ParamPair p = random_params(rng);
        double previous = HUGE_VAL;
        for (double e : {1.0, 1.5, 2.0, 4.0, kInfP}) {
            const double v = sharp_constant_origin(p, e);
            EXPECT_LE(v, previous * (1.0 + 1e-12));
            previous = v;
        }
    }
}

TEST(SharpConstant, ClosedFormsAgreeWithQuadrature) {
    RandomStream rng(43, 0);
    for (int i = 0; i < 10; ++i) {
        const ParamPair p = random_params(rng);
        for (double e : {1.0, 2.0, kInfP}) {
            EXPECT_NEAR(sharp_constant_closed_form(p, e), sharp_constant_origin(p, e), 1e-10);
        }
    }
    EXPECT_THROW(sharp_constant_origin(ParamPair(0.0, 0.0), 0.5), DomainError);
}

TEST(Extremal, AttainsConstant) {
    RandomStream rng(44, 0);
    for (int i = 0; i < 20; ++i) {
        const ParamPair p = random_params(rng);
        for (double e : {1.5, 2.0, 4.0, kInfP}) {
            const BoundaryFunction phi = extremal_phi(p, e);
            EXPECT_NEAR(phi.lp_norm(e), 1.0, 1e-10);
            const double achieved = deriv_at(p, phi, DiskPoint(0.0)).norm();
            const double target = sharp_constant_origin(p, e);
            EXPECT_NEAR(achieved / target, 1.0, 1e-7) << "p=" << e;
        }
    }
    EXPECT_THROW(extremal_phi(ParamPair(0.0, 0.0), 1.0), DomainError);
}

TEST(Extremal, HarmonicUnimodular) {
    const BoundaryFunction phi = extremal_phi(ParamPair(0.0, 0.0), kInfP);
    for (double t : {0.3, 1.0, 2.0, -2.9}) {
        const Complex want = std::polar(1.0, t) * std::conj(1.0 + std::polar(1.0, 2.0 * t)) /
                             std::abs(1.0 + std::polar(1.0, 2.0 * t));
        EXPECT_NEAR(std::abs(phi(t) - want), 0.0, 1e-14);
    }
    EXPECT_NEAR(origin_ratio(ParamPair(0.0, 0.0), phi, kInfP), kFourOverPi, 1e-9);
}

TEST(Extremal, BumpApproachesL1Constant) {
    const ParamPair p({0.4, 0.2}, {0.1, -0.3});
    const double closed = sharp_constant_closed_form(p, 1.0);
    const double wide = origin_ratio(p, approx_extremal_p1(p, 0.5), 1.0) / closed;
    const double narrow = origin_ratio(p, approx_extremal_p1(p, 0.05), 1.0) / closed;
    EXPECT_GT(wide, 0.9);
    EXPECT_LE(wide, 1.0 + 1e-8);
    EXPECT_GT(narrow, 0.999);
    EXPECT_LE(narrow, 1.0 + 1e-8);
    EXPECT_GT(narrow, wide);
    EXPECT_NEAR(approx_extremal_p1(p, 0.05).lp_norm(1.0), 1.0, 1e-9);
    EXPECT_THROW(approx_extremal_p1(p, 0.0), DomainError);
    EXPECT_THROW(approx_extremal_p1(p, 0.6), DomainError);
}

TEST(RandomSearch, HarmonicInfinityReport) {
    const SharpConstantReport r = random_search(ParamPair(0.0, 0.0), kInfP, 500, 8, 42);
    EXPECT_TRUE(r.consistent());
    EXPECT_LE(r.random_search_max, kFourOverPi * (1.0 + 1e-6));
    EXPECT_GE(r.random_search_max, 0.95 * kFourOverPi);
    EXPECT_NEAR(r.closed_form, kFourOverPi, 1e-14);
    EXPECT_EQ(r.n_trials, 500);
    EXPECT_EQ(r.seed, 42u);
}

TEST(RandomSearch, SeededWithExtremiser) {
    const ParamPair p({0.2, 0.3}, 0.5);
    const SharpConstantReport r = random_search(p, 2.0, 1, 4, 1, extremal_phi(p, 2.0));
    EXPECT_NEAR(r.random_search_max / r.closed_form, 1.0, 1e-7);
    EXPECT_TRUE(r.consistent());
}

TEST(RandomSearch, Preconditions) {
    EXPECT_THROW(random_search(ParamPair(0.0, 0.0), 2.0, 0, 4, 1), DomainError);
    EXPECT_THROW(random_search(ParamPair(0.0, 0.0), 2.0, 1, 0, 1), DomainError);
}

TEST(RandomSearch, ReportSerialisation) {
    SharpConstantReport r;
    r.p = kInfP;
    r.closed_form = 1.5;
    r.quadrature_value = 1.5;
    r.achieved_by_extremal = 1.25;
    r.random_search_max = 1.0;
    r.n_trials = 3;
    r.seed = 9;
    EXPECT_EQ(SharpConstantReport::csv_header(),
              "p,closed_form,quadrature_value,achieved_by_extremal,random_search_max,n_trials,seed");
    EXPECT_EQ(r.csv_row(), "inf,1.5,1.5,1.25,1,3,9");
    EXPECT_TRUE(r.consistent());
    r.random_search_max = 1.6;
    EXPECT_FALSE(r.consistent());
}
