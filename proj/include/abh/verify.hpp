#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abh/parallel.hpp"
#include "abh/quadrature.hpp"
#include "abh/types.hpp"

namespace abh {

/// Multiplicative slack on every lhs <= rhs comparison.
inline constexpr double kSuiteSlack = 1e-8;

/// One inequality lhs <= rhs (or lhs < rhs when strict).
struct CheckRow {
    std::string inputs;  // "key=value;..." with no commas
    double lhs = 0.0;
    double rhs = 0.0;
    bool strict = false;

    double ratio() const noexcept;
    bool failed() const noexcept;
};

struct SuiteResult {
    std::string suite_name;
    int n_checks = 0;
    int n_failures = 0;
    double worst_ratio = 0.0;
    std::vector<std::string> witnesses;
    std::vector<CheckRow> rows;
    std::string note;

    bool passed() const noexcept { return n_failures == 0; }

    /// Appends a row and updates the counters.
    void record(CheckRow row);

    /// Folds another result in (sums and maxima; rows appended in order).
    void merge(const SuiteResult& other);

    /// "suite,inputs,lhs,rhs,ratio,status" rows, with header if requested.
    std::string csv(bool header = true) const;

    /// Summary object without the rows.
    std::string json() const;
};

/// ||D P[phi](z)|| <= C (lambda1 + lambda2 + |alpha z| + |beta z|) (1-|z|^2)^{-1-1/p} ||phi||_p,
///   C = |c| e^{pi|Im a - Im b|/2} (Gamma(q(A+2)-1) / Gamma^2(q(A+2)/2))^{1/q}, 1 < p <= inf,
///   C = 2^{A+2} |c| e^{pi|Im a - Im b|/2} with exponent -2, p = 1.
/// Every fourth sample sits on the ladder |z| in {0.9, 0.99, 0.999}; the rest
/// are uniform in |z| <= 0.95. For p = inf a final row checks that the bound
/// at the origin dominates d_infinity.
SuiteResult check_dfzp(const ParamPair& params, double p, int n_samples, std::uint64_t seed,
                       const QuadratureSpec& quad = {}, Execution exec = Execution::parallel);

/// The constant in front of check_dfzp's bound.
double dfzp_constant(const ParamPair& params, double p);

/// |d^k dbar^l P[phi](z)| <= C ||phi||_p (1-|z|^2)^{-(k+l+1/p)} (exponent k+l+1 at p = 1),
/// C = poly_bound_constant(P_{k,l}) |c| F_p with F_inf the r-independent
/// L^1 kernel bound, F_p the L^q kernel bound to the power 1/q, F_1 = 2^{A+2} e^{..}.
/// Throws DepthError if k + l > 6.
SuiteResult check_higher_order(const ParamPair& params, double p, int k, int l, int n_samples,
                               std::uint64_t seed, const QuadratureSpec& quad = {},
                               Execution exec = Execution::parallel);

double higher_order_constant(const ParamPair& params, double p, int k, int l);

/// Comparison claims on a grid of alpha > -1 (DomainError otherwise):
/// |alpha| + alpha + 2 < 2(alpha + 2); B(alpha/2 + 1/2, 1/2) < pi for alpha > 0;
/// g(alpha) = B(alpha/2 + 1/2, 1/2)/pi strictly decreasing with g(0) = 1;
/// for alpha < 0 the bound ratio (1-|z|^2)^{-alpha} decreasing along |z| = 0.9, 0.99, 0.999.
SuiteResult check_alpha_comparisons(std::span<const double> alpha_grid);

/// g(alpha) = B(alpha/2 + 1/2, 1/2) / pi.
double g_alpha(double alpha);

/// 2(alpha+2) Gamma^2(alpha/2+1) / (pi Gamma(alpha+1)).
double ta_origin_constant(double alpha);

/// f = P_{alpha/2,alpha/2}[phi], M = ||phi||_inf: ||Df(z)|| <= (2 + alpha + |alpha z|) M / (1-|z|^2)
/// at random z, ||Df(0)|| <= ta_origin_constant(alpha) M, and the extremiser
/// reaching the origin constant to 1e-6.
SuiteResult check_ta_harmonic(double alpha, int n_samples, std::uint64_t seed, const QuadratureSpec& quad = {},
                              Execution exec = Execution::parallel);

/// extremal_phi (approx_extremal_p1 at p = 1) reaches the sharp constant to
/// 1e-6 and a random search of n_trials never exceeds it.
SuiteResult check_extremal(const ParamPair& params, double p, int n_trials, std::uint64_t seed,
                           const QuadratureSpec& quad = {}, Execution exec = Execution::parallel);

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") at the default parameter matrix.
/// n_samples applies to the sampled suites; higher-order uses half of it.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, int n_samples,
                                   const QuadratureSpec& quad = {}, Execution exec = Execution::parallel);

}  // namespace abh
