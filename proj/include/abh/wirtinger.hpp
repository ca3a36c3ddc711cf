#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "abh/types.hpp"

// Symbolic Wirtinger derivatives of the kernel u_{alpha,beta}.
//
// d^k dbar^l u = P_{k,l} * u, where P_{k,l} is a polynomial in
//
//     u = (1 - |z|^2)^{-1},  v = (1 - z)^{-1},  w = (1 - zbar)^{-1},  z,  zbar
//
// (here "u" is the variable, not the kernel). Differentiation of the
// variables obeys
//
//     d u = zbar u^2,  dbar u = z u^2,
//     d v = v^2,       dbar v = 0,
//     d w = 0,         dbar w = w^2,
//     d z = 1,  dbar z = 0,  d zbar = 0,  dbar zbar = 1,
//
// and one step of the recursion is
//
//     P_{k+1,l} = d P_{k,l} + P_{k,l} ((alpha+1) v - (alpha+beta+1) zbar u),
//     P_{k,l+1} = dbar P_{k,l} + P_{k,l} ((beta+1) w - (alpha+beta+1) z u).
//
// Differentiating a z or zbar factor lowers the degree in (u, v, w) by one.
// Such terms are lifted back with the identity 1 = u - z zbar u, so every
// term of P_{k,l} has a + b + c = k + l exactly.

namespace abh {

/// Exponents (a, b, c, m, n) of u^a v^b w^c z^m zbar^n.
using Exponents = std::array<int, 5>;

/// Sparse polynomial in (u, v, w, z, zbar) with complex coefficients.
/// Stored coefficients are nonzero.
class WirtingerPoly {
public:
    WirtingerPoly() = default;

    static WirtingerPoly constant(Complex value);

    const std::map<Exponents, Complex>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds coef * monomial, dropping the entry if it cancels to zero.
    void add(const Exponents& e, Complex coef);

    /// Common value of a + b + c over all terms, or -1 if the terms disagree
    /// (or the polynomial is empty).
    int homogeneous_degree() const noexcept;

    /// Largest m + n over all terms.
    int max_z_degree() const noexcept;

private:
    std::map<Exponents, Complex> terms_;
};

/// One d/dz step of the recursion (including the lift to full degree).
WirtingerPoly step_dz(const WirtingerPoly& p, const ParamPair& params);

/// One d/dzbar step of the recursion.
WirtingerPoly step_dzbar(const WirtingerPoly& p, const ParamPair& params);

inline constexpr int kMaxDerivOrder = 12;

/// P_{k,l}, built as k d-steps followed by l dbar-steps.
/// Throws DepthError if k + l > 12.
WirtingerPoly derive_poly(const ParamPair& params, int k, int l);

/// Flattened form of a WirtingerPoly for repeated evaluation (e.g. at every
/// quadrature node).
class CompiledPoly {
public:
    explicit CompiledPoly(const WirtingerPoly& poly);

    /// Sum of the terms at z, with Neumaier-compensated accumulation.
    Complex operator()(Complex z) const;

    /// Same, with 1 - z and 1 - |z|^2 supplied by the caller (accurate near
    /// the boundary when computed from polar form).
    Complex operator()(Complex z, Complex one_minus_z, double defect) const;

private:
    std::vector<std::array<int, 5>> exponents_;
    std::vector<Complex> coefs_;
    int max_exponent_ = 0;
};

/// P evaluated at z (u, v, w, z, zbar substituted), compensated summation.
Complex eval_poly(const WirtingerPoly& poly, const DiskPoint& z);

/// d^k dbar^l u_{alpha,beta}(z).
Complex deriv_u(const ParamPair& params, int k, int l, const DiskPoint& z);

/// sum |coef| 2^{b+c}: with |v|, |w| <= 2u and |z| <= 1 this gives
/// |d^k dbar^l u| <= C |u| / (1 - |z|^2)^{k+l}.
/// Throws InvariantError unless the polynomial is homogeneous.
double poly_bound_constant(const WirtingerPoly& poly);

/// JSON text: [{"exponents":[a,b,c,m,n],"coef":[re,im]}, ...].
std::string to_json(const WirtingerPoly& poly);

}  // namespace abh
