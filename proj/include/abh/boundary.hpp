#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "abh/quadrature.hpp"
#include "abh/types.hpp"

namespace abh {

/// Sentinel for p = infinity in norm and constant computations.
inline constexpr double kInfP = std::numeric_limits<double>::infinity();

/// A function on the unit circle, phi(e^{it}).
///
/// Two representations: a trigonometric polynomial sum_k c_k e^{ikt}
/// (uniform samples are converted to one by trigonometric interpolation), or
/// an arbitrary rule t -> phi(e^{it}). Values are immutable; copies share the
/// underlying data. Norms use the normalised measure dm, m(T) = 1.
class BoundaryFunction {
public:
    using Rule = std::function<Complex(double)>;

    static BoundaryFunction from_rule(Rule rule, std::string name);

    /// sum_{k = kmin}^{kmin + coeffs.size() - 1} coeffs[k - kmin] e^{ikt}.
    static BoundaryFunction trig(int kmin, std::vector<Complex> coeffs, std::string name);

    /// Trigonometric interpolant of samples at t_j = -pi + 2 pi j / N.
    /// N must be a power of two >= 64 (DomainError otherwise).
    static BoundaryFunction from_samples(const std::vector<Complex>& samples, std::string name);

    /// Random trigonometric polynomial of the given bandwidth with standard
    /// complex normal coefficients; deterministic in (seed, stream).
    static BoundaryFunction random_trig(int bandwidth, std::uint64_t seed, std::uint64_t stream = 0);

    /// "one", "cos", "zeta^k" (k in Z, "zeta" means k = 1) or
    /// "random-trig(N, seed)". Throws DomainError on anything else.
    static BoundaryFunction named(std::string_view spec);

    /// Reads "t,re,im" rows (optional header line); the t column must be the
    /// uniform grid -pi + 2 pi j / N.
    static BoundaryFunction read_csv(std::istream& in, std::string name = "csv");

    /// Writes n uniform samples as "t,re,im" with a header row.
    void write_csv(std::ostream& out, std::size_t n) const;

    Complex operator()(double t) const;

    const std::string& name() const noexcept { return name_; }

    bool is_trig() const noexcept { return trig_ != nullptr; }

    /// Largest |k| with a stored coefficient (0 for rules).
    int bandwidth() const noexcept;

    /// Fourier coefficient k of a trigonometric polynomial (0 outside the
    /// stored range). Throws DomainError for rule functions.
    Complex coefficient(int k) const;

    /// ||phi||_{L^p(dm)}. For p = kInfP, the maximum of |phi| over a fine grid
    /// refined by golden-section search (a lower bound for the true sup).
    double lp_norm(double p, const QuadratureSpec& quad = {}) const;

    friend BoundaryFunction operator*(Complex a, const BoundaryFunction& f);
    friend BoundaryFunction operator+(const BoundaryFunction& f, const BoundaryFunction& g);

private:
    struct Trig {
        int kmin;
        std::vector<Complex> coeffs;
    };

    BoundaryFunction() = default;

    std::shared_ptr<const Rule> rule_;
    std::shared_ptr<const Trig> trig_;
    std::string name_;
};

/// |x|^p with fast paths for p in {1, 1.5, 2, 4}.
double abs_pow(double magnitude, double p) noexcept;

/// Conjugate exponent q = p/(p-1); kInfP maps to 1 and 1 maps to kInfP.
double conjugate_exponent(double p);

/// Parses "inf"/"infinity" or a real number >= 1.
double parse_exponent(std::string_view text);

/// Prints "inf" for kInfP, otherwise 12 significant digits.
std::string format_exponent(double p);

}  // namespace abh
