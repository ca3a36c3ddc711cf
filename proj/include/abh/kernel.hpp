#pragma once

#include "abh/quadrature.hpp"
#include "abh/types.hpp"

// The kernel
//
//     u(z) = (1 - |z|^2)^{alpha+beta+1} (1 - z)^{-(alpha+1)} (1 - zbar)^{-(beta+1)},
//
// the Poisson kernel P(z, zeta) = c * u(z zetabar), and the bounds they obey.
// Powers use principal branches: 1 - z and 1 - zbar lie in the right half
// plane for |z| < 1, so no branch cut is crossed.

namespace abh {

/// u_{alpha,beta}(z). Exactly 1 at z = 0.
Complex u_ab(const ParamPair& params, const DiskPoint& z);

/// c_{alpha,beta} u_{alpha,beta}(z zetabar).
Complex poisson_kernel(const ParamPair& params, const DiskPoint& z, const CirclePoint& zeta);

/// e^{(pi/2)|Im a - Im b|} (1-|z|^2)^{A+1} / |1-z|^{A+2}, A = Re a + Re b.
/// Dominates |u_ab(params, z)|.
double u_ab_pointwise_bound(const ParamPair& params, const DiskPoint& z);

/// First Wirtinger derivatives of u_{alpha,beta} in closed form.
DerivPair du_closed_form(const ParamPair& params, const DiskPoint& z);

/// Circle mean \int_T |u(r zetabar)|^p dm(zeta), p >= 1.
double kernel_Lp_mean(const ParamPair& params, double r, double p, const QuadratureSpec& quad);

/// Upper bound for kernel_Lp_mean:
/// e^{p pi |Im a - Im b| / 2} Gamma(p(A+2)-1) / Gamma^2(p(A+2)/2) (1-r^2)^{1-p}.
double kernel_Lp_bound(const ParamPair& params, double r, double p);

/// r-independent bound on the p = 1 circle mean:
/// e^{pi |Im a - Im b| / 2} Gamma(A+1) / Gamma^2(A/2 + 1).
double kernel_L1_bound(const ParamPair& params);

struct IntegralCheck {
    double lhs;
    double rhs;
};

/// lhs = (1/2pi) \int (1-|z|^2)^m / |1 - z e^{-it}|^{2s} dt by quadrature,
/// rhs = Gamma(2s-1)/Gamma^2(s) (1-|z|^2)^{m-2s+1}. Requires s > 1/2.
IntegralCheck ma_integral_check(double m, double s, const DiskPoint& z, const QuadratureSpec& quad);

/// Applies L_{alpha,beta} = (1-|z|^2)((1-|z|^2) d^2/dz dzbar + alpha z d/dz
/// + beta zbar d/dzbar - alpha beta) to a function given by its value and
/// derivatives at z.
Complex apply_L(const ParamPair& params, const DiskPoint& z, Complex value, Complex dz,
                Complex dzbar, Complex dzdzbar);

}  // namespace abh
