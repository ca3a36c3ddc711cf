#include <gtest/gtest.h>

#include <json.hpp>

#include "abh/kernel.hpp"
#include "abh/rng.hpp"
#include "abh/wirtinger.hpp"
#include "support/fd_oracle.hpp"

using namespace abh;

TEST(WirtingerPoly, AddCancelsToZero) {
    WirtingerPoly p;
    p.add({1, 0, 0, 0, 0}, 2.0);
    p.add({1, 0, 0, 0, 0}, -2.0);
    EXPECT_EQ(p.size(), 0u);
    EXPECT_EQ(p.homogeneous_degree(), -1);
    EXPECT_EQ(WirtingerPoly::constant(1.0).homogeneous_degree(), 0);
}

TEST(WirtingerPoly, FirstOrderMatchesClosedForm) {
    const ParamPair params({0.5, 0.2}, {-0.3, 0.4});
    RandomStream rng(21, 0);
    for (int i = 0; i < 50; ++i) {
        const DiskPoint z(std::polar(0.95 * std::sqrt(rng.uniform()), rng.uniform(-kPi, kPi)));
        const DerivPair d = du_closed_form(params, z);
        EXPECT_LE(std::abs(deriv_u(params, 1, 0, z) - d.dz), 1e-12 * (1.0 + std::abs(d.dz)));
        EXPECT_LE(std::abs(deriv_u(params, 0, 1, z) - d.dzbar), 1e-12 * (1.0 + std::abs(d.dzbar)));
    }
}

TEST(WirtingerPoly, MixedSecondOrderValue) {
    const Complex v = eval_poly(derive_poly(ParamPair(0.5, 0.25), 1, 1), DiskPoint(Complex(0.0, 0.4)));
    EXPECT_NEAR(v.real(), 0.62089490968801319853, 1e-12);
    EXPECT_NEAR(v.imag(), -0.17959770114942530344, 1e-12);
}

TEST(WirtingerPoly, HomogeneousOfFullDegree) {
    const ParamPair params({0.3, -0.7}, {1.2, 0.1});
    for (int k = 0; k <= 5; ++k) {
        for (int l = 0; l + k <= 5; ++l) {
            EXPECT_EQ(derive_poly(params, k, l).homogeneous_degree(), k + l) << k << "," << l;
        }
    }
}

TEST(WirtingerPoly, OrderOfDerivativesCommutes) {
    // dbar d u = d dbar u: build P_{1,1} both ways.
    const ParamPair params({0.8, 0.3}, {0.1, -0.2});
    const WirtingerPoly a = step_dzbar(step_dz(WirtingerPoly::constant(1.0), params), params);
    const WirtingerPoly b = step_dz(step_dzbar(WirtingerPoly::constant(1.0), params), params);
    RandomStream rng(22, 0);
    for (int i = 0; i < 30; ++i) {
        const DiskPoint z(std::polar(0.9 * std::sqrt(rng.uniform()), rng.uniform(-kPi, kPi)));
        const Complex va = eval_poly(a, z);
        EXPECT_LE(std::abs(va - eval_poly(b, z)), 1e-11 * (1.0 + std::abs(va)));
    }
}

TEST(WirtingerPoly, PureHolomorphicLeadingCoefficient) {
    // The v^k coefficient of P_{k,0} is (alpha+1)_k.
    const ParamPair params({0.6, 0.4}, 0.3);
    for (int k = 1; k <= 6; ++k) {
        const WirtingerPoly p = derive_poly(params, k, 0);
        const auto it = p.terms().find({0, k, 0, 0, 0});
        ASSERT_NE(it, p.terms().end());
        Complex want = 1.0;
        for (int j = 0; j < k; ++j) want *= params.alpha() + 1.0 + static_cast<double>(j);
        EXPECT_LE(std::abs(it->second - want), 1e-12 * std::abs(want));
    }
}

TEST(WirtingerPoly, AgreesWithFiniteDifferences) {
    const ParamPair params({0.4, 0.3}, {-0.2, -0.5});
    const test::Field f = [&](Complex w) { return u_ab(params, DiskPoint(w)); };
    const Complex z(0.2, -0.35);
    for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l + k <= 3; ++l) {
            const Complex want = test::wirtinger_fd(f, z, k, l, 0.05);
            const Complex got = deriv_u(params, k, l, DiskPoint(z));
            EXPECT_LE(std::abs(got - want), 1e-7 * std::abs(want)) << k << "," << l;
        }
    }
}

TEST(WirtingerPoly, DepthLimit) {
    const ParamPair params(0.1, 0.1);
    EXPECT_NO_THROW(derive_poly(params, 6, 6));
    EXPECT_THROW(derive_poly(params, 7, 6), DepthError);
    EXPECT_THROW(derive_poly(params, -1, 0), DomainError);
}

TEST(WirtingerPoly, BoundConstantDominates) {
    const ParamPair params({0.2, 0.5}, {0.7, -0.1});
    RandomStream rng(23, 0);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {3, 2}}) {
        const WirtingerPoly p = derive_poly(params, k, l);
        const double c = poly_bound_constant(p);
        for (int i = 0; i < 200; ++i) {
            const DiskPoint z(std::polar(0.999 * std::sqrt(rng.uniform()), rng.uniform(-kPi, kPi)));
            EXPECT_LE(std::abs(eval_poly(p, z)) * std::pow(z.defect(), k + l), c * (1.0 + 1e-9));
        }
    }
    WirtingerPoly mixed;
    mixed.add({1, 0, 0, 0, 0}, 1.0);
    mixed.add({0, 0, 0, 0, 0}, 1.0);
    EXPECT_THROW(poly_bound_constant(mixed), InvariantError);
}

TEST(WirtingerPoly, JsonShape) {
    const auto j = nlohmann::json::parse(to_json(derive_poly(ParamPair(0.0, 0.0), 1, 0)));
    ASSERT_TRUE(j.is_array());
    ASSERT_FALSE(j.empty());
    for (const auto& term : j) {
        ASSERT_EQ(term.at("exponents").size(), 5u);
        ASSERT_EQ(term.at("coef").size(), 2u);
    }
}
