#include "abh/kernel.hpp"

#include "abh/special_fn.hpp"

namespace abh {

Complex u_ab(const ParamPair& params, const DiskPoint& z) {
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const double log_defect = std::log(z.defect());
    const Complex log_one_minus_z = std::log(1.0 - z.z());
    return std::exp((a + b + 1.0) * log_defect - (a + 1.0) * log_one_minus_z -
                    (b + 1.0) * std::conj(log_one_minus_z));
}

Complex poisson_kernel(const ParamPair& params, const DiskPoint& z, const CirclePoint& zeta) {
    return c_coef(params) * u_ab(params, DiskPoint(z.z() * std::conj(zeta.zeta())));
}

double u_ab_pointwise_bound(const ParamPair& params, const DiskPoint& z) {
    const double a = params.re_sum();
    return std::exp(0.5 * kPi * params.im_gap()) * std::pow(z.defect(), a + 1.0) /
           std::pow(std::abs(1.0 - z.z()), a + 2.0);
}

DerivPair du_closed_form(const ParamPair& params, const DiskPoint& z) {
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex w = z.z();
    const Complex u = u_ab(params, z);
    const Complex s = a + b + 1.0;
    return {(-s * std::conj(w) / z.defect() + (a + 1.0) / (1.0 - w)) * u,
            (-s * w / z.defect() + (b + 1.0) / (1.0 - std::conj(w))) * u};
}

double kernel_Lp_mean(const ParamPair& params, double r, double p, const QuadratureSpec& quad) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("kernel_Lp_mean: need 0 <= r < 1");
    if (!(p >= 1.0)) throw DomainError("kernel_Lp_mean: need p >= 1");
    return periodic_mean_real(
        [&](double t) {
            // u(r e^{-it}); the mean over the circle is the same for e^{+it}.
            return std::pow(std::abs(u_ab(params, DiskPoint(std::polar(r, -t)))), p);
        },
        quad.with_min_nodes(nodes_for_radius(r)));
}

double kernel_Lp_bound(const ParamPair& params, double r, double p) {
    const double s = p * (params.re_sum() + 2.0);
    const double log_gamma_ratio = (log_gamma(s - 1.0) - 2.0 * log_gamma(0.5 * s)).real();
    return std::exp(0.5 * p * kPi * params.im_gap() + log_gamma_ratio +
                    (1.0 - p) * std::log((1.0 - r) * (1.0 + r)));
}

double kernel_L1_bound(const ParamPair& params) {
    const double a = params.re_sum();
    return std::exp(0.5 * kPi * params.im_gap() +
                    (log_gamma(a + 1.0) - 2.0 * log_gamma(0.5 * a + 1.0)).real());
}

IntegralCheck ma_integral_check(double m, double s, const DiskPoint& z, const QuadratureSpec& quad) {
    if (!(s > 0.5 + 1e-9)) throw DomainError("ma_integral_check: need s > 1/2");
    const double defect = z.defect();
    const double lhs = periodic_mean_real(
        [&](double t) {
            return std::pow(defect, m) / std::pow(std::norm(1.0 - z.z() * std::polar(1.0, -t)), s);
        },
        quad.with_min_nodes(nodes_for_radius(z.modulus())));
    const double rhs =
        std::exp((log_gamma(2.0 * s - 1.0) - 2.0 * log_gamma(s)).real()) * std::pow(defect, m - 2.0 * s + 1.0);
    return {lhs, rhs};
}

Complex apply_L(const ParamPair& params, const DiskPoint& z, Complex value, Complex dz,
                Complex dzbar, Complex dzdzbar) {
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex w = z.z();
    return z.defect() * (z.defect() * dzdzbar + a * w * dz + b * std::conj(w) * dzbar - a * b * value);
}

}  // namespace abh
