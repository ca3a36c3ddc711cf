#pragma once

#include "abh/types.hpp"

// Complex Gamma-family functions and the complete elliptic integral of the
// second kind. All functions are pure and reentrant.
//
// Elliptic integral convention: ellint_E takes the MODULUS k,
//
//     E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt,
//
// not the parameter m = k^2 used by some libraries (e.g. mpmath.ellipe).

namespace abh {

/// log Gamma(z). The imaginary part is determined modulo 2*pi; exp() of the
/// result is Gamma(z) with relative error below 1e-12 for |z| <= 50.
/// Throws PoleError within kPoleGuard of a nonpositive integer.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma_fn(Complex z);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Complex pochhammer(Complex a, unsigned k) noexcept;

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b).
Complex beta_fn(Complex a, Complex b);

/// Complete elliptic integral of the second kind, modulus convention.
/// E(0) = pi/2, E(1) = 1. Throws DomainError outside [0, 1].
double ellint_E(double k);

/// Gauss hypergeometric value F(1/2, -1/2; 1; x) for x in [0, 1].
///
/// Summed from the Gauss series for x <= 1/2 and from the logarithmic
/// expansion about x = 1 otherwise, so it is independent of ellint_E.
double hyp_F_half(double x);

/// Normalising constant c = Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+1).
Complex c_coef(const ParamPair& params);

}  // namespace abh
