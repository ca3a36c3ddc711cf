#include <gtest/gtest.h>

#include <cmath>

#include "abh/kernel.hpp"
#include "abh/rng.hpp"
#include "abh/special_fn.hpp"
#include "support/fd_oracle.hpp"

using namespace abh;

TEST(ParamPair, Validation) {
    EXPECT_NO_THROW(ParamPair(0.0, 0.0));
    EXPECT_NO_THROW(ParamPair(-0.4, -0.5));
    EXPECT_THROW(ParamPair(-0.5, -0.5), DomainError);
    EXPECT_THROW(ParamPair(-1.0, 2.0), DomainError);
    EXPECT_THROW(ParamPair(std::nan(""), 0.0), DomainError);
    const ParamPair p({1.0, 2.0}, {-0.5, 0.0});
    EXPECT_DOUBLE_EQ(p.lambda1(), std::abs(Complex(2.0, 2.0)));
    EXPECT_DOUBLE_EQ(p.lambda2(), 0.5);
    EXPECT_DOUBLE_EQ(p.im_gap(), 2.0);
    EXPECT_EQ(p.swapped().alpha(), Complex(-0.5, 0.0));
}

TEST(DiskPoint, Validation) {
    EXPECT_THROW(DiskPoint(1.0), DomainError);
    EXPECT_THROW(DiskPoint(Complex(0.8, 0.7)), DomainError);
    EXPECT_NO_THROW(DiskPoint(0.999));
    EXPECT_NEAR(DiskPoint(Complex(0.6, 0.0)).defect(), 0.64, 1e-15);
}

TEST(CirclePoint, Normalises) {
    EXPECT_NEAR(CirclePoint(3.0 * kPi).angle(), -kPi, 1e-12);
    EXPECT_NEAR(CirclePoint(0.5).angle(), 0.5, 0.0);
}

TEST(ToString, Forms) {
    EXPECT_EQ(to_string(3.0), "3");
    EXPECT_EQ(to_string(Complex(0.5, -0.25)), "0.5-0.25i");
    EXPECT_EQ(to_string(Complex(0.0, 2.0)), "0+2i");
    EXPECT_EQ(to_string(Complex(-0.0, 0.0)), "0");
}

TEST(Quadrature, SpecValidation) {
    QuadratureSpec q;
    q.min_nodes = 32;
    EXPECT_THROW(q.validate(), DomainError);
    q = {};
    q.tol = 0.0;
    EXPECT_THROW(q.validate(), DomainError);
    q = {};
    q.max_nodes = std::size_t{1} << 21;
    EXPECT_THROW(q.validate(), DomainError);
}

TEST(Quadrature, SpectralOnSmoothIntegrand) {
    // (1/2pi) \int e^{cos t} dt = I_0(1).
    const double v = periodic_mean_real([](double t) { return std::exp(std::cos(t)); }, {});
    EXPECT_NEAR(v, 1.2660658777520083356, 1e-14);
}

TEST(Quadrature, NonConvergenceRaises) {
    QuadratureSpec q;
    q.max_nodes = 256;
    q.tol = 1e-14;
    EXPECT_THROW(periodic_mean_real([](double t) { return std::sqrt(std::abs(t)); }, q), QuadratureError);
}

TEST(Kernel, OriginAndSimpleValues) {
    EXPECT_EQ(u_ab(ParamPair({0.3, 0.2}, {-0.1, 0.4}), DiskPoint(0.0)), Complex(1.0));
    EXPECT_NEAR(std::abs(u_ab(ParamPair(0.0, 0.0), DiskPoint(0.5)) - 3.0), 0.0, 1e-14);
    const Complex v = u_ab(ParamPair(1.0, 0.0), DiskPoint(Complex(0.0, 0.3)));
    EXPECT_NEAR(v.real(), 0.69699520242403839933, 1e-14);
    EXPECT_NEAR(v.imag(), 0.20909856072721151206, 1e-14);
    const Complex w = u_ab(ParamPair({1.0, 0.5}, {-0.3, 0.2}), DiskPoint(Complex(0.2, -0.6)));
    EXPECT_NEAR(w.real(), 0.18721336661937503117, 1e-13);
    EXPECT_NEAR(w.imag(), -0.47329519220579676434, 1e-13);
}

TEST(Kernel, PoissonKernelValue) {
    const Complex v = poisson_kernel(ParamPair(0.25, 0.25), DiskPoint(0.5), CirclePoint(0.0));
    EXPECT_NEAR(v.real(), 3.4061526783028060773, 1e-13);
    EXPECT_NEAR(v.imag(), 0.0, 1e-14);
}

TEST(Kernel, ConjugationSymmetry) {
    // u_{alpha,beta}(zbar) = conj(u_{conj alpha, conj beta}(z)) = u_{beta,alpha}(z).
    RandomStream rng(11, 0);
    for (int i = 0; i < 100; ++i) {
        const ParamPair p({rng.uniform(-0.4, 2.0), rng.uniform(-1.0, 1.0)}, {rng.uniform(-0.4, 2.0), rng.uniform(-1.0, 1.0)});
        const Complex z = std::polar(0.95 * std::sqrt(rng.uniform()), rng.uniform(-kPi, kPi));
        const ParamPair q(std::conj(p.alpha()), std::conj(p.beta()));
        const Complex lhs = u_ab(p, DiskPoint(std::conj(z)));
        EXPECT_LE(std::abs(lhs - std::conj(u_ab(q, DiskPoint(z)))), 1e-12 * std::abs(lhs));
        EXPECT_LE(std::abs(lhs - u_ab(p.swapped(), DiskPoint(z))), 1e-12 * std::abs(lhs));
    }
}

TEST(Kernel, PointwiseBound) {
    RandomStream rng(12, 0);
    for (int i = 0; i < 2000; ++i) {
        const ParamPair p({rng.uniform(-0.45, 3.0), rng.uniform(-2.0, 2.0)}, {rng.uniform(-0.45, 3.0), rng.uniform(-2.0, 2.0)});
        const Complex z = std::polar(0.999 * std::sqrt(rng.uniform()), rng.uniform(-kPi, kPi));
        const DiskPoint dz(z);
        EXPECT_LE(std::abs(u_ab(p, dz)), u_ab_pointwise_bound(p, dz) * (1.0 + 1e-9));
    }
}

TEST(Kernel, ClosedFormDerivativesAgainstFiniteDifferences) {
    const ParamPair p({0.7, 0.2}, {-0.3, -0.5});
    for (Complex z : {Complex(0.1, 0.2), Complex(-0.5, 0.3), Complex(0.6, -0.6)}) {
        const DerivPair d = du_closed_form(p, DiskPoint(z));
        const test::Field f = [&](Complex w) { return u_ab(p, DiskPoint(w)); };
        const double h = 0.05 * (1.0 - std::abs(z));
        EXPECT_LE(std::abs(d.dz - test::wirtinger_fd(f, z, 1, 0, h)), 1e-9 * std::abs(d.dz));
        EXPECT_LE(std::abs(d.dzbar - test::wirtinger_fd(f, z, 0, 1, h)), 1e-9 * std::abs(d.dzbar));
    }
}

TEST(Kernel, IntegralIdentityForMeans) {
    // Both sides are the same Gamma-ratio identity; lhs by quadrature.
    for (double r : {0.0, 0.5, 0.9, 0.99}) {
        for (double s : {0.75, 1.0, 1.7, 3.2}) {
            const IntegralCheck c = ma_integral_check(1.5, s, DiskPoint(r), {});
            EXPECT_LE(c.lhs, c.rhs * (1.0 + 1e-9)) << "r=" << r << " s=" << s;
            if (r == 0.0) EXPECT_NEAR(c.lhs, 1.0, 1e-12);
        }
    }
    EXPECT_THROW(ma_integral_check(1.0, 0.5, DiskPoint(0.1), {}), DomainError);
}

TEST(Kernel, LpMeanBoundAndL1UniformBound) {
    RandomStream rng(13, 0);
    for (int i = 0; i < 40; ++i) {
        const ParamPair p({rng.uniform(-0.45, 2.0), rng.uniform(-1.0, 1.0)}, {rng.uniform(-0.45, 2.0), rng.uniform(-1.0, 1.0)});
        const double r = std::vector<double>{0.0, 0.3, 0.9, 0.99}[static_cast<std::size_t>(i % 4)];
        const double pp = rng.uniform(1.0, 4.0);
        EXPECT_LE(kernel_Lp_mean(p, r, pp, {}), kernel_Lp_bound(p, r, pp) * (1.0 + 1e-9));
        EXPECT_LE(kernel_Lp_mean(p, r, 1.0, {}), kernel_L1_bound(p) * (1.0 + 1e-9));
    }
}

TEST(Kernel, ApplyLAnnihilatesKernelClosedForm) {
    // L u = 0 using closed-form first derivatives and a finite-difference
    // mixed derivative.
    const ParamPair p({0.4, 0.1}, {0.9, -0.2});
    const Complex z(0.3, -0.2);
    const DerivPair d = du_closed_form(p, DiskPoint(z));
    const test::Field f = [&](Complex w) { return u_ab(p, DiskPoint(w)); };
    const Complex mixed = test::wirtinger_fd(f, z, 1, 1, 0.05);
    const Complex value = u_ab(p, DiskPoint(z));
    const Complex l = apply_L(p, DiskPoint(z), value, d.dz, d.dzbar, mixed);
    EXPECT_LE(std::abs(l), 1e-8 * std::abs(mixed));
}
