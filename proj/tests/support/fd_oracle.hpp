#pragma once

// Finite-difference oracles, independent of the symbolic derivative code.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace abh::test {

using Cx = std::complex<double>;

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class R>
using BasicField = std::function<std::complex<R>(std::complex<R>)>;

using Field = BasicField<double>;
// Long-double fields push the rounding floor of high-order stencils far
// below double precision.
using FieldL = BasicField<long double>;

// d^a/dx^a d^b/dy^b f at z by the tensor product of repeated centred
// differences with step h (error even in h).
template <class R>
std::complex<R> centred_partial(const BasicField<R>& f, std::complex<R> z, int a, int b, R h) {
    using C = std::complex<R>;
    C sum = 0;
    for (int i = 0; i <= a; ++i) {
        const R wx = ((i % 2) ? -1 : 1) * static_cast<R>(binomial(a, i));
        const R x = (R(0.5) * a - i) * h;
        for (int j = 0; j <= b; ++j) {
            const R wy = ((j % 2) ? -1 : 1) * static_cast<R>(binomial(b, j));
            const R y = (R(0.5) * b - j) * h;
            sum += wx * wy * f(z + C(x, y));
        }
    }
    return sum / std::pow(h, a + b);
}

// Richardson extrapolation over h, h/2, ..., h/2^(levels-1) in powers of h^2.
template <class R>
std::complex<R> richardson_partial(const BasicField<R>& f, std::complex<R> z, int a, int b, R h, int levels = 4) {
    std::vector<std::complex<R>> table(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) {
        table[static_cast<std::size_t>(i)] = centred_partial(f, z, a, b, h / std::pow(R(2), i));
    }
    for (int m = 1; m < levels; ++m) {
        const R factor = std::pow(R(4), m);
        for (int i = levels - 1; i >= m; --i) {
            table[static_cast<std::size_t>(i)] =
                (factor * table[static_cast<std::size_t>(i)] - table[static_cast<std::size_t>(i - 1)]) / (factor - 1);
        }
    }
    return table[static_cast<std::size_t>(levels - 1)];
}

// d^k dbar^l f = 2^{-(k+l)} (dx - i dy)^k (dx + i dy)^l f, expanded into
// mixed partials.
template <class R>
std::complex<R> basic_wirtinger_fd(const BasicField<R>& f, std::complex<R> z, int k, int l, R h, int levels) {
    using C = std::complex<R>;
    // Coefficients of dx^a dy^b in the expansion; index = b.
    std::vector<C> coef{C(1)};
    auto multiply = [&](C dy_coef) {
        std::vector<C> next(coef.size() + 1, C(0));
        for (std::size_t b = 0; b < coef.size(); ++b) {
            next[b] += coef[b];
            next[b + 1] += coef[b] * dy_coef;
        }
        coef = next;
    };
    for (int i = 0; i < k; ++i) multiply(C(0, -1));
    for (int i = 0; i < l; ++i) multiply(C(0, 1));
    const int n = k + l;
    C sum = 0;
    for (int b = 0; b <= n; ++b) {
        if (coef[static_cast<std::size_t>(b)] == C(0)) continue;
        sum += coef[static_cast<std::size_t>(b)] * richardson_partial(f, z, n - b, b, h, levels);
    }
    return sum / std::pow(R(2), n);
}

inline Cx wirtinger_fd(const Field& f, Cx z, int k, int l, double h, int levels = 4) {
    return basic_wirtinger_fd<double>(f, z, k, l, h, levels);
}

inline std::complex<long double> wirtinger_fd(const FieldL& f, std::complex<long double> z, int k, int l,
                                              long double h, int levels = 4) {
    return basic_wirtinger_fd<long double>(f, z, k, l, h, levels);
}

// Fourth-order centred stencils for first and pure second partials.
struct Stencil4 {
    Cx value, dx, dy, dxx, dyy;
};

inline Stencil4 stencil4(const Field& f, Cx z, double h) {
    const Cx f0 = f(z);
    const Cx xp1 = f(z + Cx(h, 0)), xm1 = f(z - Cx(h, 0)), xp2 = f(z + Cx(2 * h, 0)), xm2 = f(z - Cx(2 * h, 0));
    const Cx yp1 = f(z + Cx(0, h)), ym1 = f(z - Cx(0, h)), yp2 = f(z + Cx(0, 2 * h)), ym2 = f(z - Cx(0, 2 * h));
    Stencil4 s;
    s.value = f0;
    s.dx = (-xp2 + 8.0 * xp1 - 8.0 * xm1 + xm2) / (12.0 * h);
    s.dy = (-yp2 + 8.0 * yp1 - 8.0 * ym1 + ym2) / (12.0 * h);
    s.dxx = (-xp2 + 16.0 * xp1 - 30.0 * f0 + 16.0 * xm1 - xm2) / (12.0 * h * h);
    s.dyy = (-yp2 + 16.0 * yp1 - 30.0 * f0 + 16.0 * ym1 - ym2) / (12.0 * h * h);
    return s;
}

// L_{alpha,beta} f at z from a fourth-order stencil, with the scale of its
// largest contributing term (for a relative residual).
struct Residual {
    double value;
    double scale;
};

inline Residual operator_residual(Cx alpha, Cx beta, const Field& f, Cx z, double h) {
    const Stencil4 s = stencil4(f, z, h);
    const Cx fz = 0.5 * (s.dx - Cx(0, 1) * s.dy);
    const Cx fzbar = 0.5 * (s.dx + Cx(0, 1) * s.dy);
    const Cx lap = 0.25 * (s.dxx + s.dyy);
    const double d = 1.0 - std::norm(z);
    const Cx l = d * (d * lap + alpha * z * fz + beta * std::conj(z) * fzbar - alpha * beta * s.value);
    const double scale = d * (d * 0.25 * (std::abs(s.dxx) + std::abs(s.dyy)) + std::abs(alpha * z) * std::abs(fz) +
                              std::abs(beta * std::conj(z)) * std::abs(fzbar) + std::abs(alpha * beta) * std::abs(s.value));
    return {std::abs(l), scale};
}

}  // namespace abh::test
