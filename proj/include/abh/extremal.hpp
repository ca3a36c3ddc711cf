#pragma once

#include <cstdint>
#include <string>

#include "abh/boundary.hpp"
#include "abh/parallel.hpp"
#include "abh/quadrature.hpp"
#include "abh/types.hpp"

// Sharp bounds for ||D P[phi](0)|| over the unit ball of L^p(T, dm).
//
// With K(t) = lambda1 + lambda2 e^{2it} and q the conjugate exponent,
//
//     sup_{||phi||_p <= 1} ||D P[phi](0)|| = |c| ||K||_{L^q(dm)}
//                                           = |c| ((1/2pi) \int |K|^q dt)^{1/q},
//
// which for p = inf equals 2|c|(lambda1+lambda2) E(2 sqrt(lambda1 lambda2)/(lambda1+lambda2)) / pi
// and for p = 1 equals |c| (lambda1 + lambda2).

namespace abh {

/// Closed-form value where one exists (p = 1, 2, inf), else the quadrature
/// value; the four other fields come from independent routes.
struct SharpConstantReport {
    double p = kInfP;
    double closed_form = 0.0;
    double quadrature_value = 0.0;
    double achieved_by_extremal = 0.0;
    double random_search_max = 0.0;
    int n_trials = 0;
    std::uint64_t seed = 0;

    /// Both probes stay below closed_form (1 + 1e-6).
    bool consistent() const noexcept;

    static std::string csv_header();
    std::string csv_row() const;
    std::string json() const;
};

/// (1/2pi) \int |lambda1 + lambda2 e^{2it}|^q dt, with nodes clustered
/// near the minima of the integrand.
double k_symbol_mean(double lambda1, double lambda2, double q, const QuadratureSpec& quad = {});

/// |c| ||K||_{L^q(dm)} by periodic quadrature (p in (1, inf]); |c|(lambda1+lambda2) at p = 1.
double sharp_constant_origin(const ParamPair& params, double p, const QuadratureSpec& quad = {});

/// Elliptic-integral form of the p = inf constant.
double d_infinity(const ParamPair& params);

/// Closed form where available: p = 1, p = 2 (|c| sqrt(lambda1^2 + lambda2^2)), p = inf.
/// Falls back to sharp_constant_origin otherwise.
double sharp_constant_closed_form(const ParamPair& params, double p, const QuadratureSpec& quad = {});

/// Hoelder-equality extremiser for p in (1, inf]:
///   phi(e^{it}) = e^{it} conj(K(t)) |K(t)|^{q-2} / ||K||_q^{q-1},
/// with ||phi||_p = 1. Throws DomainError for p = 1.
BoundaryFunction extremal_phi(const ParamPair& params, double p, const QuadratureSpec& quad = {});

/// Unit-L^1 smooth bump of full angular width `width` at t = 0 (where |K| is
/// largest) carrying the phase e^{it} conj(K)/|K|. Width must lie in (0, 0.5].
BoundaryFunction approx_extremal_p1(const ParamPair& params, double width);

/// ||D P[phi](0)|| / ||phi||_p, the quantity whose supremum is the sharp constant.
double origin_ratio(const ParamPair& params, const BoundaryFunction& phi, double p,
                    const QuadratureSpec& quad = {});

/// Random trigonometric polynomials normalised to ||phi||_p = 1, followed by
/// coordinate ascent on the Fourier coefficients from the best sample.
/// Trial i draws from RandomStream(seed, i), so the result does not depend on
/// the execution policy.
SharpConstantReport random_search(const ParamPair& params, double p, int n_trials, int bandwidth,
                                  std::uint64_t seed, Execution exec = Execution::parallel);

/// As above, with `start` scored as an extra candidate before the random
/// trials (e.g. the extremiser itself).
SharpConstantReport random_search(const ParamPair& params, double p, int n_trials, int bandwidth,
                                  std::uint64_t seed, const BoundaryFunction& start,
                                  Execution exec = Execution::parallel);

}  // namespace abh
