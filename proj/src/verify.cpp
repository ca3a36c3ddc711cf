#include "abh/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "abh/boundary.hpp"
#include "abh/extremal.hpp"
#include "abh/kernel.hpp"
#include "abh/poisson.hpp"
#include "abh/rng.hpp"
#include "abh/special_fn.hpp"
#include "abh/wirtinger.hpp"

namespace abh {
namespace {

constexpr std::uint32_t kSampleTag = 0x51ab;
constexpr int kMaxSuiteOrder = 6;
constexpr std::array<double, 3> kLadder = {0.9, 0.99, 0.999};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string params_text(const ParamPair& params) {
    return "alpha=" + to_string(params.alpha()) + ";beta=" + to_string(params.beta());
}

struct Sample {
    DiskPoint z;
    BoundaryFunction phi;
};

Sample draw_sample(std::uint64_t seed, std::size_t i) {
    RandomStream rng(seed, i, kSampleTag);
    const double theta = rng.uniform(-kPi, kPi);
    double r;
    if (i % 4 == 3) {
        r = kLadder[(i / 4) % kLadder.size()];
    } else {
        r = 0.95 * std::sqrt(rng.uniform());
    }
    const int bandwidth = rng.integer(1, 16);
    return {DiskPoint(std::polar(r, theta)), BoundaryFunction::random_trig(bandwidth, seed, i)};
}

// e^{pi|Im a - Im b|/2}
double phase_factor(const ParamPair& params) { return std::exp(0.5 * kPi * params.im_gap()); }

// Gamma(x - 1) / Gamma^2(x / 2) for real x > 1.
double gamma_ratio(double x) {
    return std::exp(log_gamma(x - 1.0).real() - 2.0 * log_gamma(0.5 * x).real());
}

SuiteResult collect(std::string name, std::vector<CheckRow> rows) {
    SuiteResult result;
    result.suite_name = std::move(name);
    for (auto& row : rows) result.record(std::move(row));
    return result;
}

}  // namespace

double CheckRow::ratio() const noexcept {
    if (lhs == 0.0) return 0.0;
    if (rhs == 0.0) return lhs > 0.0 ? HUGE_VAL : 0.0;
    return lhs / rhs;
}

bool CheckRow::failed() const noexcept {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) return true;
    if (strict) return !(lhs < rhs);
    return lhs > rhs * (1.0 + kSuiteSlack);
}

void SuiteResult::record(CheckRow row) {
    ++n_checks;
    worst_ratio = std::max(worst_ratio, row.ratio());
    if (row.failed()) {
        ++n_failures;
        witnesses.push_back(row.inputs);
    }
    rows.push_back(std::move(row));
}

void SuiteResult::merge(const SuiteResult& other) {
    n_checks += other.n_checks;
    n_failures += other.n_failures;
    worst_ratio = std::max(worst_ratio, other.worst_ratio);
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string SuiteResult::csv(bool header) const {
    std::ostringstream out;
    if (header) out << "suite,inputs,lhs,rhs,ratio,status\n";
    for (const auto& row : rows) {
        out << suite_name << ',' << row.inputs << ',' << num(row.lhs) << ',' << num(row.rhs) << ','
            << num(row.ratio()) << ',' << (row.failed() ? "FAIL" : "ok") << '\n';
    }
    return out.str();
}

std::string SuiteResult::json() const {
    nlohmann::json j = {{"suite", suite_name},     {"n_checks", n_checks},   {"n_failures", n_failures},
                        {"worst_ratio", worst_ratio}, {"witnesses", witnesses}, {"passed", passed()}};
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

double dfzp_constant(const ParamPair& params, double p) {
    const double c = std::abs(c_coef(params));
    const double a = params.re_sum();
    if (p == 1.0) return std::pow(2.0, a + 2.0) * c * phase_factor(params);
    const double q = conjugate_exponent(p);
    return c * phase_factor(params) * std::pow(gamma_ratio(q * (a + 2.0)), 1.0 / q);
}

SuiteResult check_dfzp(const ParamPair& params, double p, int n_samples, std::uint64_t seed,
                       const QuadratureSpec& quad, Execution exec) {
    conjugate_exponent(p);
    const double constant = dfzp_constant(params, p);
    const double exponent = (p == 1.0) ? -2.0 : -1.0 - 1.0 / p;
    const double abs_a = std::abs(params.alpha());
    const double abs_b = std::abs(params.beta());
    const std::string prefix = params_text(params) + ";p=" + format_exponent(p);

    std::vector<CheckRow> rows(static_cast<std::size_t>(std::max(n_samples, 0)));
    parallel_for(rows.size(), exec, [&](std::size_t i) {
        const Sample s = draw_sample(seed, i);
        const double r = s.z.modulus();
        const double lhs = deriv_at(params, s.phi, s.z, quad).norm();
        const double rhs = constant * (params.lambda1() + params.lambda2() + (abs_a + abs_b) * r) *
                           std::pow(s.z.defect(), exponent) * s.phi.lp_norm(p, quad);
        rows[i] = {prefix + ";z=" + to_string(s.z.z()) + ";phi=" + s.phi.name(), lhs, rhs, false};
    });
    if (p == kInfP) {
        rows.push_back({prefix + ";origin-vs-sharp", d_infinity(params),
                        constant * (params.lambda1() + params.lambda2()), false});
    }
    SuiteResult result = collect("dfzp", std::move(rows));
    result.note = "C=" + num(constant) + ";exponent=" + num(exponent);
    return result;
}

double higher_order_constant(const ParamPair& params, double p, int k, int l) {
    const double poly = poly_bound_constant(derive_poly(params, k, l));
    const double c = std::abs(c_coef(params));
    const double a = params.re_sum();
    double factor;
    if (p == kInfP) {
        factor = kernel_L1_bound(params);
    } else if (p == 1.0) {
        factor = std::pow(2.0, a + 2.0) * phase_factor(params);
    } else {
        const double q = conjugate_exponent(p);
        factor = phase_factor(params) * std::pow(gamma_ratio(q * (a + 2.0)), 1.0 / q);
    }
    return poly * c * factor;
}

SuiteResult check_higher_order(const ParamPair& params, double p, int k, int l, int n_samples,
                               std::uint64_t seed, const QuadratureSpec& quad, Execution exec) {
    if (k < 0 || l < 0) throw DomainError("check_higher_order: negative order");
    if (k + l > kMaxSuiteOrder) throw DepthError("check_higher_order: k + l exceeds 6");
    conjugate_exponent(p);
    const WirtingerPoly poly = derive_poly(params, k, l);
    const double constant = higher_order_constant(params, p, k, l);
    const double exponent = -(k + l + ((p == kInfP) ? 0.0 : 1.0 / p));
    const std::string prefix =
        params_text(params) + ";p=" + format_exponent(p) + ";k=" + std::to_string(k) + ";l=" + std::to_string(l);

    std::vector<CheckRow> rows(static_cast<std::size_t>(std::max(n_samples, 0)));
    parallel_for(rows.size(), exec, [&](std::size_t i) {
        const Sample s = draw_sample(seed, i);
        const double lhs = std::abs(mixed_derivative(params, s.phi, poly, k, l, s.z, quad));
        const double rhs = constant * s.phi.lp_norm(p, quad) * std::pow(s.z.defect(), exponent);
        rows[i] = {prefix + ";z=" + to_string(s.z.z()) + ";phi=" + s.phi.name(), lhs, rhs, false};
    });
    SuiteResult result = collect("higher-order", std::move(rows));
    result.note = "C=" + num(constant) + ";exponent=" + num(exponent);
    return result;
}

double g_alpha(double alpha) { return beta_fn(0.5 * alpha + 0.5, 0.5).real() / kPi; }

double ta_origin_constant(double alpha) {
    const double lg = 2.0 * log_gamma(0.5 * alpha + 1.0).real() - log_gamma(alpha + 1.0).real();
    return 2.0 * (alpha + 2.0) * std::exp(lg) / kPi;
}

SuiteResult check_alpha_comparisons(std::span<const double> alpha_grid) {
    for (double a : alpha_grid) {
        if (!(a > -1.0)) throw DomainError("check_alpha_comparisons: grid values must exceed -1");
    }
    std::vector<double> grid(alpha_grid.begin(), alpha_grid.end());
    std::sort(grid.begin(), grid.end());

    SuiteResult result;
    result.suite_name = "alpha-comparisons";
    bool has_zero = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = grid[i];
        const std::string tag = "alpha=" + num(a);
        result.record({tag + ";claim=origin-constant", std::abs(a) + a + 2.0, 2.0 * (a + 2.0), true});
        if (a > 0.0) {
            const double beta = beta_fn(0.5 * a + 0.5, 0.5).real();
            result.record({tag + ";claim=beta-below-pi", beta, kPi, true});
            const double scale = (a + 1.0) * std::pow(2.0, a + 1.0);
            result.record({tag + ";claim=sharper-than-two-sided", beta * scale / kPi, scale, true});
        }
        if (a < 0.0) {
            double previous = std::pow(1.0 - kLadder[0] * kLadder[0], -a);
            for (std::size_t j = 1; j < kLadder.size(); ++j) {
                const double current = std::pow(1.0 - kLadder[j] * kLadder[j], -a);
                result.record({tag + ";claim=growth-ratio;r=" + num(kLadder[j]), current, previous, true});
                previous = current;
            }
        }
        if (i + 1 < grid.size() && grid[i + 1] > a) {
            result.record({tag + ";claim=g-decreasing", g_alpha(grid[i + 1]), g_alpha(a), true});
        }
        if (a == 0.0) has_zero = true;
    }
    if (has_zero || grid.empty()) {
        // |g(0) - 1| <= 1e-12, written as lhs <= rhs.
        result.record({"alpha=0;claim=g-at-zero", 1.0 + std::abs(g_alpha(0.0) - 1.0), 1.0 + 1e-12, false});
    }
    return result;
}

SuiteResult check_ta_harmonic(double alpha, int n_samples, std::uint64_t seed, const QuadratureSpec& quad,
                              Execution exec) {
    if (!(alpha > -1.0)) throw DomainError("check_ta_harmonic: alpha must exceed -1");
    const ParamPair params(0.5 * alpha, 0.5 * alpha);
    const double origin = ta_origin_constant(alpha);
    const std::string prefix = "alpha=" + num(alpha);

    std::vector<CheckRow> rows(static_cast<std::size_t>(std::max(n_samples, 0)));
    parallel_for(rows.size(), exec, [&](std::size_t i) {
        const Sample s = draw_sample(seed, i);
        const double m = s.phi.lp_norm(kInfP, quad);
        const double r = s.z.modulus();
        const double lhs = deriv_at(params, s.phi, s.z, quad).norm();
        const double rhs = (2.0 + alpha + std::abs(alpha) * r) * m / s.z.defect();
        rows[i] = {prefix + ";z=" + to_string(s.z.z()) + ";phi=" + s.phi.name(), lhs, rhs, false};
    });
    SuiteResult result = collect("ta-harmonic", std::move(rows));

    const DiskPoint zero(0.0);
    if (n_samples > 0) {
        const BoundaryFunction phi = draw_sample(seed, 0).phi;
        result.record({prefix + ";z=0;phi=" + phi.name(), deriv_at(params, phi, zero, quad).norm(),
                       origin * phi.lp_norm(kInfP, quad), false});
    }
    const BoundaryFunction star = extremal_phi(params, kInfP, quad);
    const double achieved = deriv_at(params, star, zero, quad).norm();
    result.record({prefix + ";z=0;phi=extremal", achieved, origin, false});
    result.record({prefix + ";z=0;phi=extremal;claim=attained", origin * (1.0 - 1e-6), achieved, false});
    result.note = "origin_constant=" + num(origin);
    return result;
}

SuiteResult check_extremal(const ParamPair& params, double p, int n_trials, std::uint64_t seed,
                           const QuadratureSpec& quad, Execution exec) {
    const SharpConstantReport report = random_search(params, p, n_trials, 8, seed, exec);
    const std::string prefix = params_text(params) + ";p=" + format_exponent(p);
    SuiteResult result;
    result.suite_name = "extremal";
    const double bound = report.closed_form;
    result.record({prefix + ";claim=extremal-below", report.achieved_by_extremal, bound, false});
    result.record({prefix + ";claim=extremal-attains", bound * (1.0 - 1e-6), report.achieved_by_extremal, false});
    result.record({prefix + ";claim=search-below", report.random_search_max, bound * (1.0 + 1e-6), false});
    result.record({prefix + ";claim=routes-agree", report.quadrature_value,
                   bound * (1.0 + 1e-9), false});
    result.record({prefix + ";claim=routes-agree-low", bound, report.quadrature_value * (1.0 + 1e-9), false});
    (void)quad;
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all", "dfzp", "higher-order", "alpha-comparisons",
                                                   "ta-harmonic", "extremal"};
    return names;
}

namespace {

std::vector<ParamPair> default_params() {
    return {ParamPair(0.0, 0.0), ParamPair(0.5, 0.5), ParamPair(1.0, Complex(0.5, 0.5)), ParamPair(-0.3, 0.2),
            ParamPair(Complex(0.25, 0.3), Complex(-0.4, 0.1))};
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = -9; i <= 100; ++i) grid.push_back(std::round(i * 0.1 * 1e12) / 1e12);
    return grid;
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, int n_samples,
                                   const QuadratureSpec& quad, Execution exec) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw DomainError("unknown suite: " + name);
    }
    const bool all = name == "all";
    const std::array<double, 3> exponents = {1.0, 2.0, kInfP};
    std::vector<SuiteResult> out;

    if (all || name == "dfzp") {
        SuiteResult merged;
        merged.suite_name = "dfzp";
        for (const auto& params : default_params()) {
            for (double p : exponents) merged.merge(check_dfzp(params, p, n_samples, seed, quad, exec));
        }
        out.push_back(std::move(merged));
    }
    if (all || name == "higher-order") {
        SuiteResult merged;
        merged.suite_name = "higher-order";
        const std::array<std::pair<int, int>, 4> orders = {{{1, 1}, {2, 0}, {2, 2}, {3, 1}}};
        const ParamPair params(0.5, 0.5);
        for (const auto& [k, l] : orders) {
            for (double p : exponents) {
                merged.merge(check_higher_order(params, p, k, l, std::max(n_samples / 2, 1), seed, quad, exec));
            }
        }
        out.push_back(std::move(merged));
    }
    if (all || name == "alpha-comparisons") {
        const std::vector<double> grid = default_alpha_grid();
        out.push_back(check_alpha_comparisons(grid));
    }
    if (all || name == "ta-harmonic") {
        SuiteResult merged;
        merged.suite_name = "ta-harmonic";
        for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.0}) {
            merged.merge(check_ta_harmonic(alpha, std::max(n_samples / 2, 1), seed, quad, exec));
        }
        out.push_back(std::move(merged));
    }
    if (all || name == "extremal") {
        SuiteResult merged;
        merged.suite_name = "extremal";
        const std::array<double, 4> ps = {1.0, 1.5, 2.0, kInfP};
        for (const auto& params : default_params()) {
            for (double p : ps) merged.merge(check_extremal(params, p, 50, seed, quad, exec));
        }
        out.push_back(std::move(merged));
    }
    return out;
}

}  // namespace abh
