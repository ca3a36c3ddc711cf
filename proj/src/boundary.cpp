#include "abh/boundary.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "abh/rng.hpp"
#include "fft.hpp"

namespace abh {
namespace {

bool parse_double(std::string_view text, double& out) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
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

}  // namespace

BoundaryFunction BoundaryFunction::from_rule(Rule rule, std::string name) {
    BoundaryFunction f;
    f.rule_ = std::make_shared<const Rule>(std::move(rule));
    f.name_ = std::move(name);
    return f;
}

BoundaryFunction BoundaryFunction::trig(int kmin, std::vector<Complex> coeffs, std::string name) {
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
        kmin = 0;
    }
    BoundaryFunction f;
    f.trig_ = std::make_shared<const Trig>(Trig{kmin, std::move(coeffs)});
    f.name_ = std::move(name);
    return f;
}

BoundaryFunction BoundaryFunction::from_samples(const std::vector<Complex>& samples, std::string name) {
    const std::size_t n = samples.size();
    if (n < 64 || !std::has_single_bit(n)) {
        throw DomainError("BoundaryFunction: sample count must be a power of two >= 64");
    }
    // t_j = -pi + 2 pi j / N, so c_k = (-1)^k X_k / N with X the forward DFT.
    const std::vector<Complex> spectrum = detail::dft(samples, true);
    const int half = static_cast<int>(n / 2);
    std::vector<Complex> coeffs(n + 1);
    const double scale = 1.0 / static_cast<double>(n);
    for (int k = -half; k <= half; ++k) {
        const std::size_t idx = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
        Complex c = spectrum[idx] * scale * ((k % 2 == 0) ? 1.0 : -1.0);
        if (k == -half || k == half) c *= 0.5;  // split the Nyquist term
        coeffs[static_cast<std::size_t>(k + half)] = c;
    }
    return trig(-half, std::move(coeffs), std::move(name));
}

BoundaryFunction BoundaryFunction::random_trig(int bandwidth, std::uint64_t seed, std::uint64_t stream) {
    if (bandwidth < 0) throw DomainError("random_trig: negative bandwidth");
    RandomStream rng(seed, stream, 0x7219);
    std::vector<Complex> coeffs(static_cast<std::size_t>(2 * bandwidth + 1));
    for (auto& c : coeffs) {
        const double re = rng.normal();
        const double im = rng.normal();
        c = Complex(re, im) * std::sqrt(0.5);
    }
    std::ostringstream name;
    name << "random-trig(" << bandwidth << "," << seed << ")";
    if (stream != 0) name << "#" << stream;
    return trig(-bandwidth, std::move(coeffs), name.str());
}

BoundaryFunction BoundaryFunction::named(std::string_view spec) {
    const std::string text(spec);
    if (text == "one") return trig(0, {1.0}, "one");
    if (text == "cos") return trig(-1, {0.5, 0.0, 0.5}, "cos");
    static const std::regex zeta_re(R"(zeta(\^([+-]?\d+))?)");
    static const std::regex random_re(R"(random-trig\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::smatch m;
    if (std::regex_match(text, m, zeta_re)) {
        const int k = m[2].matched ? std::stoi(m[2].str()) : 1;
        return trig(k, {1.0}, text);
    }
    if (std::regex_match(text, m, random_re)) {
        return random_trig(std::stoi(m[1].str()), std::stoull(m[2].str()));
    }
    throw DomainError("unknown boundary function '" + text + "'");
}

BoundaryFunction BoundaryFunction::read_csv(std::istream& in, std::string name) {
    std::vector<double> ts;
    std::vector<Complex> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
            fields.push_back(rest.substr(0, pos));
            rest.remove_prefix(pos + 1);
        }
        fields.push_back(rest);
        double t = 0, re = 0, im = 0;
        const bool ok = fields.size() == 3 && parse_double(fields[0], t) && parse_double(fields[1], re) &&
                        parse_double(fields[2], im);
        if (!ok) {
            if (first) {  // header
                first = false;
                continue;
            }
            throw DomainError("boundary CSV: malformed row '" + line + "'");
        }
        first = false;
        ts.push_back(t);
        values.emplace_back(re, im);
    }
    const std::size_t n = values.size();
    if (n < 64 || !std::has_single_bit(n)) {
        throw DomainError("boundary CSV: sample count must be a power of two >= 64");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double expected = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        if (std::abs(ts[j] - expected) > 1e-9) {
            throw DomainError("boundary CSV: t column is not the uniform grid -pi + 2 pi j / N");
        }
    }
    return from_samples(values, std::move(name));
}

void BoundaryFunction::write_csv(std::ostream& out, std::size_t n) const {
    out << "t,re,im\n";
    char buf[96];
    for (std::size_t j = 0; j < n; ++j) {
        const double t = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        const Complex v = (*this)(t);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, v.real(), v.imag());
        out << buf;
    }
}

Complex BoundaryFunction::operator()(double t) const {
    if (rule_) return (*rule_)(t);
    const Complex step(std::cos(t), std::sin(t));
    Complex basis = std::polar(1.0, static_cast<double>(trig_->kmin) * t);
    Complex sum = 0.0;
    for (const Complex& c : trig_->coeffs) {
        sum += c * basis;
        basis *= step;
    }
    return sum;
}

int BoundaryFunction::bandwidth() const noexcept {
    if (!trig_) return 0;
    const int kmax = trig_->kmin + static_cast<int>(trig_->coeffs.size()) - 1;
    return std::max(std::abs(trig_->kmin), std::abs(kmax));
}

Complex BoundaryFunction::coefficient(int k) const {
    if (!trig_) throw DomainError("coefficient: not a trigonometric polynomial");
    const int idx = k - trig_->kmin;
    if (idx < 0 || idx >= static_cast<int>(trig_->coeffs.size())) return 0.0;
    return trig_->coeffs[static_cast<std::size_t>(idx)];
}

double BoundaryFunction::lp_norm(double p, const QuadratureSpec& quad) const {
    if (p == kInfP) {
        const std::size_t n = std::max<std::size_t>(4096, std::bit_ceil(static_cast<std::size_t>(64 * bandwidth() + 64)));
        const double h = 2.0 * kPi / static_cast<double>(n);
        std::vector<std::pair<double, double>> samples(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = -kPi + h * static_cast<double>(j);
            samples[j] = {std::abs((*this)(t)), t};
        }
        const std::size_t candidates = std::min<std::size_t>(8, n);
        std::partial_sort(samples.begin(), samples.begin() + static_cast<long>(candidates), samples.end(),
                          [](const auto& a, const auto& b) { return a.first > b.first; });
        double best = samples.front().first;
        for (std::size_t i = 0; i < candidates; ++i) {
            const double t = samples[i].second;
            best = std::max(best, golden_max([&](double s) { return std::abs((*this)(s)); }, t - h, t + h, 1e-12));
        }
        return best;
    }
    if (!(p >= 1.0)) throw DomainError("lp_norm: need p >= 1");
    const double mean = periodic_mean_real([&](double t) { return abs_pow(std::abs((*this)(t)), p); },
                                           quad.with_min_nodes(static_cast<std::size_t>(8 * bandwidth())));
    return std::pow(mean, 1.0 / p);
}

BoundaryFunction operator*(Complex a, const BoundaryFunction& f) {
    std::ostringstream name;
    name << to_string(a) << "*" << f.name_;
    if (f.trig_) {
        std::vector<Complex> coeffs = f.trig_->coeffs;
        for (auto& c : coeffs) c *= a;
        return BoundaryFunction::trig(f.trig_->kmin, std::move(coeffs), name.str());
    }
    return BoundaryFunction::from_rule([a, f](double t) { return a * f(t); }, name.str());
}

BoundaryFunction operator+(const BoundaryFunction& f, const BoundaryFunction& g) {
    const std::string name = f.name_ + "+" + g.name_;
    if (f.trig_ && g.trig_) {
        const int lo = std::min(f.trig_->kmin, g.trig_->kmin);
        const int hi = std::max(f.trig_->kmin + static_cast<int>(f.trig_->coeffs.size()),
                                g.trig_->kmin + static_cast<int>(g.trig_->coeffs.size()));
        std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo));
        for (int k = lo; k < hi; ++k) coeffs[static_cast<std::size_t>(k - lo)] = f.coefficient(k) + g.coefficient(k);
        return BoundaryFunction::trig(lo, std::move(coeffs), name);
    }
    return BoundaryFunction::from_rule([f, g](double t) { return f(t) + g(t); }, name);
}

double abs_pow(double magnitude, double p) noexcept {
    if (p == 1.0) return magnitude;
    if (p == 2.0) return magnitude * magnitude;
    if (p == 1.5) return magnitude * std::sqrt(magnitude);
    if (p == 4.0) {
        const double sq = magnitude * magnitude;
        return sq * sq;
    }
    return std::pow(magnitude, p);
}

double conjugate_exponent(double p) {
    if (p == kInfP) return 1.0;
    if (!(p >= 1.0)) throw DomainError("conjugate_exponent: need p >= 1");
    if (p == 1.0) return kInfP;
    return p / (p - 1.0);
}

double parse_exponent(std::string_view text) {
    if (text == "inf" || text == "infinity") return kInfP;
    double p = 0.0;
    if (!parse_double(text, p) || !std::isfinite(p) || p < 1.0) {
        throw DomainError("exponent must be 'inf' or a real number >= 1");
    }
    return p;
}

std::string format_exponent(double p) {
    if (p == kInfP) return "inf";
    return to_string(Complex(p, 0.0));
}

}  // namespace abh
