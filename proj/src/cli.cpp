#include "abh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "abh/boundary.hpp"
#include "abh/extremal.hpp"
#include "abh/kernel.hpp"
#include "abh/poisson.hpp"
#include "abh/special_fn.hpp"
#include "abh/verify.hpp"
#include "abh/wirtinger.hpp"

namespace abh {
namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Options {
    std::string alpha = "0";
    std::string beta = "0";
    std::string z = "0";
    std::string p = "inf";
    std::string phi = "one";
    std::string format = "csv";
    std::string output;
    std::string suite = "all";
    std::string grid;
    std::string family = "alpha";
    std::optional<double> t;
    double tol = 1e-10;
    std::uint64_t seed = 42;
    int k = 1;
    int l = 0;
    int samples = 200;
    int trials = 500;
    int bandwidth = 8;
    bool dump_poly = false;
    bool serial = false;
};

QuadratureSpec make_quad(const Options& o) {
    QuadratureSpec q;
    q.tol = o.tol;
    if (const char* env = std::getenv("ABH_MAX_NODES")) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw UsageError("ABH_MAX_NODES must be a positive integer");
        q.max_nodes = static_cast<std::size_t>(n);
    }
    try {
        q.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return q;
}

ParamPair make_params(const Options& o) { return ParamPair(parse_complex(o.alpha), parse_complex(o.beta)); }

BoundaryFunction make_phi(const std::string& spec) {
    try {
        return BoundaryFunction::named(spec);
    } catch (const DomainError&) {
        std::ifstream in(spec);
        if (!in) throw UsageError("--phi: not a known family or readable CSV file: " + spec);
        return BoundaryFunction::read_csv(in, spec);
    }
}

Execution exec_of(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

void check_format(const Options& o) {
    if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
}

int cmd_kernel(const Options& o, std::ostream& out) {
    const ParamPair params = make_params(o);
    const DiskPoint z(parse_complex(o.z));
    if (o.t) {
        out << to_string(poisson_kernel(params, z, CirclePoint(*o.t))) << '\n';
    } else {
        out << to_string(u_ab(params, z)) << '\n';
    }
    return 0;
}

int cmd_extend(const Options& o, std::ostream& out) {
    const ParamPair params = make_params(o);
    const DiskPoint z(parse_complex(o.z));
    const BoundaryFunction phi = make_phi(o.phi);
    out << to_string(poisson_extend(params, phi, z, make_quad(o))) << '\n';
    return 0;
}

int cmd_deriv(const Options& o, std::ostream& out, bool phi_given) {
    if (o.k < 0 || o.l < 0) throw UsageError("--k and --l must be nonnegative");
    if (o.k + o.l > kMaxDerivOrder) throw UsageError("--k + --l must not exceed 12");
    const ParamPair params = make_params(o);
    if (o.dump_poly) {
        out << to_json(derive_poly(params, o.k, o.l)) << '\n';
        return 0;
    }
    const DiskPoint z(parse_complex(o.z));
    if (phi_given) {
        const WirtingerPoly poly = derive_poly(params, o.k, o.l);
        out << to_string(mixed_derivative(params, make_phi(o.phi), poly, o.k, o.l, z, make_quad(o))) << '\n';
    } else {
        out << to_string(deriv_u(params, o.k, o.l, z)) << '\n';
    }
    return 0;
}

int cmd_constant(const Options& o, std::ostream& out) {
    check_format(o);
    const ParamPair params = make_params(o);
    const double p = parse_exponent(o.p);
    const QuadratureSpec quad = make_quad(o);
    const double closed = sharp_constant_closed_form(params, p, quad);
    if (o.format == "csv") {
        out << num(closed) << '\n';
        return 0;
    }
    const double quadrature = sharp_constant_origin(params, p, quad);
    nlohmann::json j = {{"alpha", to_string(params.alpha())},
                        {"beta", to_string(params.beta())},
                        {"p", format_exponent(p)},
                        {"closed_form", closed},
                        {"quadrature", quadrature},
                        {"abs_difference", std::abs(closed - quadrature)}};
    out << j.dump() << '\n';
    return 0;
}

int cmd_extremal(const Options& o, std::ostream& out) {
    check_format(o);
    if (o.trials < 1) throw UsageError("--trials must be >= 1");
    if (o.bandwidth < 1) throw UsageError("--bandwidth must be >= 1");
    const ParamPair params = make_params(o);
    const double p = parse_exponent(o.p);
    const SharpConstantReport r = random_search(params, p, o.trials, o.bandwidth, o.seed, exec_of(o));
    if (o.format == "csv") {
        out << SharpConstantReport::csv_header() << '\n' << r.csv_row() << '\n';
    } else {
        out << r.json() << '\n';
    }
    return r.consistent() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.samples < 1) throw UsageError("--samples must be >= 1");
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite: " + o.suite);
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw UsageError("cannot open --output: " + o.output);
    }
    const std::vector<SuiteResult> results = run_suite(o.suite, o.seed, o.samples, make_quad(o), exec_of(o));
    bool ok = true;
    bool first = true;
    for (const auto& r : results) {
        out << r.json() << '\n';
        if (file) file << r.csv(first);
        first = false;
        if (!r.passed()) {
            ok = false;
            for (const auto& w : r.witnesses) err << r.suite_name << " violated at " << w << '\n';
        }
    }
    return ok ? 0 : 1;
}

double df0alpha_const(double a) {
    return (std::abs(a) + a + 2.0) *
           std::exp(log_gamma(a + 1.0).real() - 2.0 * log_gamma(0.5 * a + 1.0).real());
}

double li_const(double a) {
    return 2.0 * (a + 2.0) * std::exp(log_gamma(a + 1.0).real() - 2.0 * log_gamma(0.5 * a + 1.0).real());
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.family != "alpha" && o.family != "t-alpha") throw UsageError("--family must be alpha or t-alpha");
    std::vector<double> grid;
    try {
        grid = parse_grid(o.grid);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    for (double a : grid) {
        if (!(a > -1.0)) throw UsageError("--alpha-grid values must exceed -1");
    }
    out << "alpha,df0alpha_const,li_const,dva_rada_const,sharp_origin,g_alpha\n";
    for (double a : grid) {
        const ParamPair params = (o.family == "alpha") ? ParamPair(0.0, a) : ParamPair(0.5 * a, 0.5 * a);
        out << num(a) << ',' << num(df0alpha_const(a)) << ',' << num(li_const(a)) << ','
            << num((1.0 + a) * std::pow(2.0, 1.0 + a)) << ',' << num(d_infinity(params)) << ','
            << num(g_alpha(a)) << '\n';
    }
    return 0;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    static const std::string real = R"(((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
    static const std::regex pure_real("^([+-]?)" + real + "$");
    static const std::regex pure_imag("^([+-]?)" + real + "?i$");
    static const std::regex full("^([+-]?)" + real + "([+-])" + real + "?i$");
    const std::string s(text);
    std::smatch m;
    const auto sign = [](const std::string& g) { return g == "-" ? -1.0 : 1.0; };
    const auto mag = [](const std::ssub_match& g) { return g.matched ? std::stod(g.str()) : 1.0; };
    if (std::regex_match(s, m, pure_real)) return {sign(m[1]) * std::stod(m[2].str()), 0.0};
    if (std::regex_match(s, m, pure_imag)) return {0.0, sign(m[1]) * mag(m[2])};
    if (std::regex_match(s, m, full)) return {sign(m[1]) * std::stod(m[2].str()), sign(m[3]) * mag(m[4])};
    throw DomainError("malformed complex literal: '" + s + "'");
}

std::vector<double> parse_grid(std::string_view text) {
    static const std::regex form(R"(^\s*([^:]+):([^:]+):([^:]+)\s*$)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, form)) throw DomainError("grid must be start:stop:step");
    double v[3];
    for (int i = 0; i < 3; ++i) {
        const std::string part = m[i + 1].str();
        char* end = nullptr;
        v[i] = std::strtod(part.c_str(), &end);
        if (end == part.c_str() || *end != '\0' || !std::isfinite(v[i])) {
            throw DomainError("grid entry is not a number: '" + part + "'");
        }
    }
    const auto [start, stop, step] = std::tuple(v[0], v[1], v[2]);
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    if (stop < start) throw DomainError("grid is empty");
    const double span = (stop - start) / step;
    if (span > 1e7) throw DomainError("grid too large");
    const auto n = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    return grid;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Poisson extensions and derivative bounds for (alpha,beta)-harmonic functions", "abh"};
    app.require_subcommand(1);
    app.add_option("--tol", o.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);

    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "Complex alpha");
        sub->add_option("--beta", o.beta, "Complex beta");
        sub->add_option("--tol", o.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    };

    CLI::App* kernel = app.add_subcommand("kernel", "Kernel u_{alpha,beta}(z), or the Poisson kernel with --t");
    add_params(kernel);
    kernel->add_option("--z", o.z, "Point in the disk");
    kernel->add_option("--t", o.t, "Boundary angle zeta = e^{it}");

    CLI::App* extend = app.add_subcommand("extend", "Poisson extension P[phi](z)");
    add_params(extend);
    extend->add_option("--z", o.z, "Point in the disk");
    extend->add_option("--phi", o.phi, "Boundary data: one, cos, zeta^k, random-trig(N, seed) or CSV path");

    CLI::App* deriv = app.add_subcommand("deriv", "d^k dbar^l of the kernel, or of P[phi] with --phi");
    add_params(deriv);
    deriv->add_option("--z", o.z, "Point in the disk");
    deriv->add_option("--k", o.k, "Order in z");
    deriv->add_option("--l", o.l, "Order in zbar");
    CLI::Option* deriv_phi = deriv->add_option("--phi", o.phi, "Boundary data");
    deriv->add_flag("--dump-poly", o.dump_poly, "Print the kernel polynomial as JSON");

    CLI::App* constant = app.add_subcommand("constant", "Sharp constant for ||D P[phi](0)||");
    add_params(constant);
    constant->add_option("--p", o.p, "Exponent in [1, inf]");
    constant->add_option("--format", o.format, "csv (one number) or json (both routes)");

    CLI::App* extremal = app.add_subcommand("extremal", "Extremiser and random-search report");
    add_params(extremal);
    extremal->add_option("--p", o.p, "Exponent in [1, inf]");
    extremal->add_option("--trials", o.trials, "Random trials");
    extremal->add_option("--bandwidth", o.bandwidth, "Trigonometric bandwidth of the trials");
    extremal->add_option("--seed", o.seed, "Random seed");
    extremal->add_option("--format", o.format, "csv or json");
    extremal->add_flag("--serial", o.serial, "Run the serial reference path");

    CLI::App* verify = app.add_subcommand("verify", "Inequality suites");
    verify->add_option("--suite", o.suite, "all, dfzp, higher-order, alpha-comparisons, ta-harmonic or extremal");
    verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--samples", o.samples, "Samples per cell");
    verify->add_option("--output", o.output, "CSV report path");
    verify->add_option("--tol", o.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    verify->add_flag("--serial", o.serial, "Run the serial reference path");

    CLI::App* table = app.add_subcommand("table", "Comparison constants over an alpha grid");
    table->add_option("--alpha-grid", o.grid, "start:stop:step, inclusive")->required();
    table->add_option("--family", o.family, "alpha (0, alpha) or t-alpha (alpha/2, alpha/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "abh: " << e.what() << '\n';
        return 2;
    }

    try {
        if (kernel->parsed()) return cmd_kernel(o, out);
        if (extend->parsed()) return cmd_extend(o, out);
        if (deriv->parsed()) return cmd_deriv(o, out, deriv_phi->count() > 0);
        if (constant->parsed()) return cmd_constant(o, out);
        if (extremal->parsed()) return cmd_extremal(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (table->parsed()) return cmd_table(o, out);
    } catch (const UsageError& e) {
        err << "abh: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "abh: " << e.what() << '\n';
        return 2;
    } catch (const PoleError& e) {
        err << "abh: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "abh: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace abh
