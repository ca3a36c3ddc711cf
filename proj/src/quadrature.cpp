#include "abh/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace abh {
namespace {

constexpr double kRoundingFloor = 64.0 * std::numeric_limits<double>::epsilon();

}  // namespace

void QuadratureSpec::validate() const {
    if (!(tol > 0.0)) throw DomainError("QuadratureSpec: tol must be positive");
    if (min_nodes < 64) throw DomainError("QuadratureSpec: min_nodes must be >= 64");
    if (max_nodes > (std::size_t{1} << 20)) throw DomainError("QuadratureSpec: max_nodes must be <= 2^20");
    if (min_nodes > max_nodes) throw DomainError("QuadratureSpec: min_nodes exceeds max_nodes");
}

QuadratureSpec QuadratureSpec::with_min_nodes(std::size_t nodes) const {
    QuadratureSpec out = *this;
    const std::size_t wanted = std::bit_ceil(std::max(nodes, min_nodes));
    out.min_nodes = std::min(wanted, max_nodes);
    return out;
}

std::size_t nodes_for_radius(double r) {
    const double width = std::max(1.0 - r, 1e-7);
    const double nodes = std::min(8.0 / width, static_cast<double>(std::size_t{1} << 20));
    return std::bit_ceil(static_cast<std::size_t>(nodes));
}

std::vector<Complex> periodic_mean(std::size_t dim, const VectorIntegrand& f,
                                   const QuadratureSpec& spec) {
    spec.validate();
    std::vector<Complex> value(dim);
    std::vector<Complex> sum(dim);
    std::vector<Complex> carry(dim);
    std::vector<double> abs_sum(dim);
    std::vector<Complex> scratch(dim);

    // Neumaier summation per real component.
    const auto add = [](double& s, double& c, double x) {
        const double t = s + x;
        c += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
        s = t;
    };

    auto accumulate = [&](std::size_t n, std::size_t first, std::size_t stride) {
        const double h = 2.0 * kPi / static_cast<double>(n);
        for (std::size_t j = first; j < n; j += stride) {
            f(-kPi + h * static_cast<double>(j), scratch);
            for (std::size_t d = 0; d < dim; ++d) {
                double re = sum[d].real(), im = sum[d].imag();
                double cre = carry[d].real(), cim = carry[d].imag();
                add(re, cre, scratch[d].real());
                add(im, cim, scratch[d].imag());
                sum[d] = {re, im};
                carry[d] = {cre, cim};
                abs_sum[d] += std::abs(scratch[d]);
            }
        }
    };

    std::size_t n = spec.min_nodes;
    accumulate(n, 0, 1);
    for (std::size_t d = 0; d < dim; ++d) value[d] = (sum[d] + carry[d]) / static_cast<double>(n);

    while (n < spec.max_nodes) {
        n *= 2;
        accumulate(n, 1, 2);  // even nodes of the refined grid are already summed
        bool converged = true;
        for (std::size_t d = 0; d < dim; ++d) {
            const Complex next = (sum[d] + carry[d]) / static_cast<double>(n);
            // Below kRoundingFloor * mean|f| the difference is rounding noise
            // from cancellation, not discretisation error.
            const double floor = kRoundingFloor * abs_sum[d] / static_cast<double>(n);
            if (std::abs(next - value[d]) > spec.tol * (1.0 + std::abs(next)) + floor) converged = false;
            value[d] = next;
        }
        if (converged) return value;
    }
    throw QuadratureError("periodic_mean: no convergence with " + std::to_string(spec.max_nodes) + " nodes");
}

Complex periodic_mean(const std::function<Complex(double)>& f, const QuadratureSpec& spec) {
    return periodic_mean(1, [&](double t, std::span<Complex> out) { out[0] = f(t); }, spec)[0];
}

double periodic_mean_real(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    return periodic_mean(1, [&](double t, std::span<Complex> out) { out[0] = f(t); }, spec)[0].real();
}

}  // namespace abh
