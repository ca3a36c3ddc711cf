#include "abh/special_fn.hpp"

#include <array>
#include <limits>

namespace abh {
namespace {

// Lanczos coefficients, g = 607/128, 14 terms (Numerical Recipes, 3rd ed.).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// Valid for Re z >= 1/2.
Complex log_gamma_right(Complex z) {
    const Complex t = z + 5.24218750000000000;
    const Complex head = (z + 0.5) * std::log(t) - t;
    Complex series = 0.999999999999997092;
    Complex y = z;
    for (double c : kLanczos) {
        y += 1.0;
        series += c / y;
    }
    return head + std::log(2.5066282746310005 * series / z);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("log_gamma: non-finite argument");
    }
    if (distance_to_pole(z) < kPoleGuard) {
        throw PoleError("log_gamma: argument at a pole of Gamma");
    }
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex pochhammer(Complex a, unsigned k) noexcept {
    Complex product = 1.0;
    for (unsigned j = 0; j < k; ++j) product *= a + static_cast<double>(j);
    return product;
}

Complex beta_fn(Complex a, Complex b) {
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double ellint_E(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("ellint_E: modulus outside [0, 1]");
    if (k == 1.0) return 1.0;
    // Arithmetic-geometric mean: K = pi / (2 M(1, k')), E = K (1 - sum 2^{n-1} c_n^2).
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double c = k;
    double weight = 0.5;
    double sum = weight * c * c;
    for (int iter = 0; iter < 64 && std::abs(c) > std::numeric_limits<double>::epsilon() * a; ++iter) {
        const double next_a = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = next_a;
        weight *= 2.0;
        sum += weight * c * c;
    }
    return kPi / (2.0 * a) * (1.0 - sum);
}

double hyp_F_half(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("hyp_F_half: argument outside [0, 1]");
    if (x <= 0.5) {
        // term ratio (n+1/2)(n-1/2) x / (n+1)^2 is below x, so the tail after
        // a term t is bounded by |t| x / (1 - x).
        double term = 1.0;
        double sum = 1.0;
        for (int n = 0; n < 200; ++n) {
            term *= (n + 0.5) * (n - 0.5) / ((n + 1.0) * (n + 1.0)) * x;
            sum += term;
            if (std::abs(term) * x / (1.0 - x) < 1e-18) break;
        }
        return sum;
    }
    if (x == 1.0) return 2.0 / kPi;
    // E(k) = 1 + 1/2 sum_m (1/2)_m (3/2)_m / ((2)_m m!) k'^{2m+2}
    //            (ln(1/k') + d(m) - 1/((2m+1)(2m+2))),
    // d(m) = psi(1+m) - psi(1/2+m), k'^2 = 1 - x.
    const double kc2 = 1.0 - x;
    const double log_inv_kc = -0.5 * std::log(kc2);
    double coef = 1.0;
    double d = 2.0 * std::log(2.0);
    double power = kc2;
    double sum = 0.0;
    for (int m = 0; m < 200; ++m) {
        const double term =
            coef * power * (log_inv_kc + d - 1.0 / ((2.0 * m + 1.0) * (2.0 * m + 2.0)));
        sum += term;
        if (m > 2 && std::abs(term) < 1e-18) break;
        coef *= (m + 0.5) * (m + 1.5) / ((m + 2.0) * (m + 1.0));
        d += 1.0 / (m + 1.0) - 1.0 / (m + 0.5);
        power *= kc2;
    }
    return (1.0 + 0.5 * sum) * 2.0 / kPi;
}

Complex c_coef(const ParamPair& params) {
    const Complex a = params.alpha();
    const Complex b = params.beta();
    if (distance_to_pole(a + b + 1.0) < kPoleGuard) {
        throw PoleError("c_coef: alpha + beta + 1 at a pole of Gamma");
    }
    return std::exp(log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(a + b + 1.0));
}

}  // namespace abh
