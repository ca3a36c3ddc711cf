#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "abh/types.hpp"

namespace abh {

/// Settings of the periodic trapezoid rule with node doubling.
///
/// The rule starts at min_nodes and doubles until two successive values
/// differ by at most tol * (1 + |value|) in every component, plus a rounding
/// allowance of 64 eps times the mean of |f| (relevant only when the
/// integrand cancels heavily).
struct QuadratureSpec {
    double tol = 1e-10;
    std::size_t max_nodes = std::size_t{1} << 20;
    std::size_t min_nodes = 64;

    /// Throws DomainError unless min_nodes >= 64, max_nodes <= 2^20,
    /// min_nodes <= max_nodes and tol > 0.
    void validate() const;

    /// Copy with min_nodes raised to at least `nodes` (rounded up to a power
    /// of two and clamped to max_nodes).
    QuadratureSpec with_min_nodes(std::size_t nodes) const;
};

/// Node count suited to an integrand that peaks with width ~ (1 - r).
std::size_t nodes_for_radius(double r);

/// Integrand with `dim` complex components; fills `out` at angle t.
using VectorIntegrand = std::function<void(double t, std::span<Complex> out)>;

/// Mean value (1/2pi) \int_{-pi}^{pi} f(t) dt of a vector-valued 2pi-periodic
/// integrand by the trapezoid rule on nodes t_j = -pi + 2pi j / N.
/// Throws QuadratureError if max_nodes is reached without convergence.
std::vector<Complex> periodic_mean(std::size_t dim, const VectorIntegrand& f,
                                   const QuadratureSpec& spec);

/// Scalar complex convenience overload.
Complex periodic_mean(const std::function<Complex(double)>& f, const QuadratureSpec& spec);

/// Scalar real convenience overload.
double periodic_mean_real(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace abh
