#pragma once

#include <span>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/parallel.hpp"
#include "abh/quadrature.hpp"
#include "abh/types.hpp"
#include "abh/wirtinger.hpp"

namespace abh {

/// P_{alpha,beta}[phi](z) = \int_T c u(z zetabar) phi(zeta) dm(zeta).
Complex poisson_extend(const ParamPair& params, const BoundaryFunction& phi, const DiskPoint& z,
                       const QuadratureSpec& quad = {});

/// Wirtinger derivatives of the extension, differentiated under the integral
/// sign:
///
///   dz    = c \int (-(a+b+1) zbar/(1-|z|^2) + (a+1) zetabar/(1 - z zetabar)) u(z zetabar) phi dm
///   dzbar = c \int (-(a+b+1) z   /(1-|z|^2) + (b+1) zeta   /(1 - zbar zeta)) u(z zetabar) phi dm
DerivPair deriv_at(const ParamPair& params, const BoundaryFunction& phi, const DiskPoint& z,
                   const QuadratureSpec& quad = {});

/// d^k dbar^l of the extension at z, given the kernel polynomial P_{k,l}.
/// The chain rule contributes zetabar^k zeta^l under the integral.
Complex mixed_derivative(const ParamPair& params, const BoundaryFunction& phi, const WirtingerPoly& poly,
                         int k, int l, const DiskPoint& z, const QuadratureSpec& quad = {});

/// I(phi) = lambda1 |\int zetabar phi dm| + lambda2 |\int zeta phi dm|.
double i_functional(const ParamPair& params, const BoundaryFunction& phi, const QuadratureSpec& quad = {});

/// The same functional as a maximum over |eta| = 1:
/// (1/2pi) max |\int e^{-it} phi(e^{it}) (lambda1 + lambda2 (etabar/eta) e^{2it}) dt|,
/// located on a grid of eta_grid angles and refined by golden-section search.
double i_max_form(const ParamPair& params, const BoundaryFunction& phi, const QuadratureSpec& quad = {},
                  int eta_grid = 256);

/// Largest L^p circle mean of the extension over radii in r_grid (for
/// p = kInfP, the largest |P[phi]| over the polar sample grid). This is a
/// lower bound for the h^p norm, which takes a sup over all r < 1.
double hp_norm(const ParamPair& params, const BoundaryFunction& phi, double p, std::span<const double> r_grid,
               const QuadratureSpec& quad = {});

/// Default radii {0, 0.1, ..., 0.9, 0.99}.
std::vector<double> default_r_grid();

/// poisson_extend at many points; the OpenMP path and the serial reference
/// return identical vectors.
std::vector<Complex> extend_on_grid(const ParamPair& params, const BoundaryFunction& phi,
                                    std::span<const DiskPoint> points, const QuadratureSpec& quad = {},
                                    Execution exec = Execution::parallel);

}  // namespace abh
