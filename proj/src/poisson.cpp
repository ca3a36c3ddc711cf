#include "abh/poisson.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "abh/kernel.hpp"
#include "abh/special_fn.hpp"
#include "fft.hpp"

namespace abh {
namespace {

// u_{alpha,beta}(w) for |w| fixed: the (1-|w|^2) power is hoisted.
class KernelAtRadius {
public:
    KernelAtRadius(const ParamPair& params, double defect)
        : a1_(params.alpha() + 1.0),
          b1_(params.beta() + 1.0),
          head_((params.alpha() + params.beta() + 1.0) * std::log(defect)) {}

    Complex operator()(Complex one_minus_w) const {
        const Complex log_one_minus_w = std::log(one_minus_w);
        return std::exp(head_ - a1_ * log_one_minus_w - b1_ * std::conj(log_one_minus_w));
    }

private:
    Complex a1_;
    Complex b1_;
    Complex head_;
};

// w = r e^{-is} together with 1 - w, free of cancellation when r is near 1:
// 1 - r cos s = (1 - r) + 2 r sin^2(s/2).
struct Node {
    Complex w;
    Complex one_minus_w;
};

Node node_at(double r, double s) {
    const double sin_half = std::sin(0.5 * s);
    const double sin_s = std::sin(s);
    const double cos_s = std::cos(s);
    return {Complex(r * cos_s, -r * sin_s), Complex((1.0 - r) + 2.0 * r * sin_half * sin_half, r * sin_s)};
}

// Quadrature nodes are shifted to start at arg z; the periodic trapezoid
// rule is unchanged in accuracy, and w = z e^{-it} = |z| e^{-is} with t = arg z + s.
double angle_of(const DiskPoint& z) { return z.modulus() > 0.0 ? std::arg(z.z()) : 0.0; }

QuadratureSpec spec_for(const QuadratureSpec& quad, const DiskPoint& z, const BoundaryFunction& phi) {
    return quad.with_min_nodes(
        std::max(nodes_for_radius(z.modulus()), static_cast<std::size_t>(4 * phi.bandwidth() + 4)));
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

// Values of the extension on the circle |z| = r at theta_j = -pi + 2 pi j / M,
// as the circular convolution of kernel samples with phi samples.
std::vector<Complex> circle_values(const ParamPair& params, const BoundaryFunction& phi, double r,
                                   std::size_t m) {
    const Complex c = c_coef(params);
    const KernelAtRadius kernel(params, (1.0 - r) * (1.0 + r));
    const double h = 2.0 * kPi / static_cast<double>(m);
    std::vector<Complex> kernel_samples(m);
    std::vector<Complex> phi_samples(m);
    for (std::size_t j = 0; j < m; ++j) {
        kernel_samples[j] = c * kernel(node_at(r, -h * static_cast<double>(j)).one_minus_w);
        phi_samples[j] = phi(-kPi + h * static_cast<double>(j));
    }
    std::vector<Complex> kernel_hat = detail::dft(kernel_samples, true);
    const std::vector<Complex> phi_hat = detail::dft(phi_samples, true);
    for (std::size_t j = 0; j < m; ++j) kernel_hat[j] *= phi_hat[j];
    std::vector<Complex> values = detail::dft(kernel_hat, false);
    const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    for (auto& v : values) v *= scale;
    return values;
}

}  // namespace

Complex poisson_extend(const ParamPair& params, const BoundaryFunction& phi, const DiskPoint& z,
                       const QuadratureSpec& quad) {
    const Complex c = c_coef(params);
    const KernelAtRadius kernel(params, z.defect());
    const double r = z.modulus();
    const double theta = angle_of(z);
    const Complex mean = periodic_mean(
        [&](double s) { return kernel(node_at(r, s).one_minus_w) * phi(theta + s); }, spec_for(quad, z, phi));
    return c * mean;
}

DerivPair deriv_at(const ParamPair& params, const BoundaryFunction& phi, const DiskPoint& z,
                   const QuadratureSpec& quad) {
    const Complex c = c_coef(params);
    const KernelAtRadius kernel(params, z.defect());
    const double r = z.modulus();
    const double theta = angle_of(z);
    const Complex zz = z.z();
    const Complex a1 = params.alpha() + 1.0;
    const Complex b1 = params.beta() + 1.0;
    const Complex s = params.alpha() + params.beta() + 1.0;
    const Complex radial_dz = -s * std::conj(zz) / z.defect();
    const Complex radial_dzbar = -s * zz / z.defect();
    const std::vector<Complex> means = periodic_mean(
        2,
        [&](double sigma, std::span<Complex> out) {
            const double t = theta + sigma;
            const Complex zeta = std::polar(1.0, t);
            const Node node = node_at(r, sigma);
            const Complex weight = kernel(node.one_minus_w) * phi(t);
            out[0] = (radial_dz + a1 * std::conj(zeta) / node.one_minus_w) * weight;
            out[1] = (radial_dzbar + b1 * zeta / std::conj(node.one_minus_w)) * weight;
        },
        spec_for(quad, z, phi));
    return {c * means[0], c * means[1]};
}

Complex mixed_derivative(const ParamPair& params, const BoundaryFunction& phi, const WirtingerPoly& poly,
                         int k, int l, const DiskPoint& z, const QuadratureSpec& quad) {
    const Complex c = c_coef(params);
    const KernelAtRadius kernel(params, z.defect());
    const CompiledPoly compiled(poly);
    const double r = z.modulus();
    const double theta = angle_of(z);
    const double defect = z.defect();
    const Complex mean = periodic_mean(
        [&](double s) {
            const double t = theta + s;
            const Node node = node_at(r, s);
            // zetabar^k zeta^l = e^{i(l-k)t}
            return std::polar(1.0, static_cast<double>(l - k) * t) * compiled(node.w, node.one_minus_w, defect) *
                   kernel(node.one_minus_w) * phi(t);
        },
        spec_for(quad, z, phi));
    return c * mean;
}

double i_functional(const ParamPair& params, const BoundaryFunction& phi, const QuadratureSpec& quad) {
    const std::vector<Complex> moments = periodic_mean(
        2,
        [&](double t, std::span<Complex> out) {
            const Complex zeta = std::polar(1.0, t);
            const Complex value = phi(t);
            out[0] = std::conj(zeta) * value;
            out[1] = zeta * value;
        },
        quad.with_min_nodes(static_cast<std::size_t>(4 * phi.bandwidth() + 4)));
    return params.lambda1() * std::abs(moments[0]) + params.lambda2() * std::abs(moments[1]);
}

double i_max_form(const ParamPair& params, const BoundaryFunction& phi, const QuadratureSpec& quad,
                  int eta_grid) {
    if (eta_grid < 64) throw DomainError("i_max_form: eta_grid must be >= 64");
    // (1/2pi) \int e^{-it} phi (lambda1 + lambda2 e^{-2i theta} e^{2it}) dt for eta = e^{i theta}
    const std::vector<Complex> moments = periodic_mean(
        2,
        [&](double t, std::span<Complex> out) {
            const Complex value = phi(t);
            out[0] = std::polar(1.0, -t) * value;
            out[1] = std::polar(1.0, t) * value;
        },
        quad.with_min_nodes(static_cast<std::size_t>(4 * phi.bandwidth() + 4)));
    const double l1 = params.lambda1();
    const double l2 = params.lambda2();
    auto objective = [&](double theta) {
        return std::abs(l1 * moments[0] + l2 * std::polar(1.0, -2.0 * theta) * moments[1]);
    };
    const double h = 2.0 * kPi / eta_grid;
    int best = 0;
    double best_value = -1.0;
    for (int j = 0; j < eta_grid; ++j) {
        const double v = objective(-kPi + h * j);
        if (v > best_value) {
            best_value = v;
            best = j;
        }
    }
    const double theta = -kPi + h * best;
    return std::max(best_value, golden_max(objective, theta - h, theta + h, 1e-10));
}

double hp_norm(const ParamPair& params, const BoundaryFunction& phi, double p, std::span<const double> r_grid,
               const QuadratureSpec& quad) {
    quad.validate();
    if (!(p >= 1.0)) throw DomainError("hp_norm: need p >= 1");
    double result = 0.0;
    for (double r : r_grid) {
        if (!(r >= 0.0 && r < 1.0)) throw DomainError("hp_norm: radii must lie in [0, 1)");
        std::size_t m = quad.with_min_nodes(std::max(nodes_for_radius(r),
                                                     static_cast<std::size_t>(4 * phi.bandwidth() + 4)))
                            .min_nodes;
        double previous = -1.0;
        double value = 0.0;
        for (;; m *= 2) {
            if (m > quad.max_nodes) {
                throw QuadratureError("hp_norm: circle mean did not converge");
            }
            const std::vector<Complex> values = circle_values(params, phi, r, m);
            if (p == kInfP) {
                std::size_t best = 0;
                for (std::size_t j = 1; j < m; ++j) {
                    if (std::abs(values[j]) > std::abs(values[best])) best = j;
                }
                const double h = 2.0 * kPi / static_cast<double>(m);
                const double theta = -kPi + h * static_cast<double>(best);
                auto modulus = [&](double angle) {
                    return std::abs(poisson_extend(params, phi, DiskPoint(std::polar(r, angle)), quad));
                };
                value = std::max(std::abs(values[best]), golden_max(modulus, theta - h, theta + h, 1e-10));
            } else {
                double sum = 0.0;
                for (const Complex& v : values) sum += abs_pow(std::abs(v), p);
                value = std::pow(sum / static_cast<double>(m), 1.0 / p);
            }
            if (previous >= 0.0 && std::abs(value - previous) <= quad.tol * (1.0 + value)) break;
            previous = value;
        }
        result = std::max(result, value);
    }
    return result;
}

std::vector<double> default_r_grid() { return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}; }

std::vector<Complex> extend_on_grid(const ParamPair& params, const BoundaryFunction& phi,
                                    std::span<const DiskPoint> points, const QuadratureSpec& quad,
                                    Execution exec) {
    std::vector<Complex> out(points.size());
    parallel_for(points.size(), exec,
                 [&](std::size_t i) { out[i] = poisson_extend(params, phi, points[i], quad); });
    return out;
}

}  // namespace abh
