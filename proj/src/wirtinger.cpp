#include "abh/wirtinger.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "abh/kernel.hpp"

namespace abh {
namespace {

enum Var { kU = 0, kV = 1, kW = 2, kZ = 3, kZbar = 4 };

Exponents shifted(Exponents e, Var var, int delta) {
    e[var] += delta;
    return e;
}

// Lifts every term of degree below `degree` using 1 = u - z zbar u.
WirtingerPoly lift_to_degree(const WirtingerPoly& p, int degree) {
    WirtingerPoly out;
    std::vector<std::pair<Exponents, Complex>> pending(p.terms().begin(), p.terms().end());
    while (!pending.empty()) {
        std::vector<std::pair<Exponents, Complex>> next;
        for (const auto& [e, c] : pending) {
            if (e[kU] + e[kV] + e[kW] >= degree) {
                out.add(e, c);
                continue;
            }
            Exponents up = shifted(e, kU, 1);
            next.emplace_back(up, c);
            up[kZ] += 1;
            up[kZbar] += 1;
            next.emplace_back(up, -c);
        }
        pending = std::move(next);
    }
    return out;
}

// Neumaier-compensated accumulation of complex terms.
class CompensatedSum {
public:
    void add(Complex x) {
        add_real(x.real(), re_, re_c_);
        add_real(x.imag(), im_, im_c_);
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_real(double x, double& sum, double& comp) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace

WirtingerPoly WirtingerPoly::constant(Complex value) {
    WirtingerPoly p;
    p.add({0, 0, 0, 0, 0}, value);
    return p;
}

void WirtingerPoly::add(const Exponents& e, Complex coef) {
    if (coef == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(e, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

int WirtingerPoly::homogeneous_degree() const noexcept {
    int degree = -1;
    for (const auto& [e, c] : terms_) {
        const int d = e[kU] + e[kV] + e[kW];
        if (degree == -1) {
            degree = d;
        } else if (d != degree) {
            return -1;
        }
    }
    return degree;
}

int WirtingerPoly::max_z_degree() const noexcept {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[kZ] + e[kZbar]);
    return best;
}

WirtingerPoly step_dz(const WirtingerPoly& p, const ParamPair& params) {
    const Complex a1 = params.alpha() + 1.0;
    const Complex s = params.alpha() + params.beta() + 1.0;
    WirtingerPoly raw;
    int degree = 0;
    for (const auto& [e, c] : p.terms()) {
        degree = std::max(degree, e[kU] + e[kV] + e[kW] + 1);
        // dP/du * zbar u^2
        if (e[kU] > 0) raw.add(shifted(shifted(e, kU, 1), kZbar, 1), c * static_cast<double>(e[kU]));
        // dP/dv * v^2
        if (e[kV] > 0) raw.add(shifted(e, kV, 1), c * static_cast<double>(e[kV]));
        // dP/dz * 1
        if (e[kZ] > 0) raw.add(shifted(e, kZ, -1), c * static_cast<double>(e[kZ]));
        // P * ((alpha+1) v - (alpha+beta+1) zbar u)
        raw.add(shifted(e, kV, 1), c * a1);
        raw.add(shifted(shifted(e, kU, 1), kZbar, 1), -c * s);
    }
    return lift_to_degree(raw, degree);
}

WirtingerPoly step_dzbar(const WirtingerPoly& p, const ParamPair& params) {
    const Complex b1 = params.beta() + 1.0;
    const Complex s = params.alpha() + params.beta() + 1.0;
    WirtingerPoly raw;
    int degree = 0;
    for (const auto& [e, c] : p.terms()) {
        degree = std::max(degree, e[kU] + e[kV] + e[kW] + 1);
        if (e[kU] > 0) raw.add(shifted(shifted(e, kU, 1), kZ, 1), c * static_cast<double>(e[kU]));
        if (e[kW] > 0) raw.add(shifted(e, kW, 1), c * static_cast<double>(e[kW]));
        if (e[kZbar] > 0) raw.add(shifted(e, kZbar, -1), c * static_cast<double>(e[kZbar]));
        raw.add(shifted(e, kW, 1), c * b1);
        raw.add(shifted(shifted(e, kU, 1), kZ, 1), -c * s);
    }
    return lift_to_degree(raw, degree);
}

WirtingerPoly derive_poly(const ParamPair& params, int k, int l) {
    if (k < 0 || l < 0) throw DomainError("derive_poly: negative order");
    if (k + l > kMaxDerivOrder) throw DepthError("derive_poly: k + l exceeds 12");
    WirtingerPoly p = WirtingerPoly::constant(1.0);
    for (int i = 0; i < k; ++i) p = step_dz(p, params);
    for (int i = 0; i < l; ++i) p = step_dzbar(p, params);
    return p;
}

namespace {

// Undoes the lift: rewrites u z zbar = u - 1 until no term has u, z and zbar
// together. The lifted form has large cancelling terms near |z| = 1; the
// reduced form evaluates the same function without them.
WirtingerPoly reduce_for_evaluation(const WirtingerPoly& poly) {
    std::map<Exponents, Complex> work = poly.terms();
    WirtingerPoly out;
    while (!work.empty()) {
        // Largest key first: its replacements have smaller z and zbar exponents
        // or smaller u exponent, so each monomial is finalised once.
        auto it = std::prev(work.end());
        const Exponents e = it->first;
        const Complex c = it->second;
        work.erase(it);
        if (c == Complex{}) continue;
        if (e[0] >= 1 && e[3] >= 1 && e[4] >= 1) {
            Exponents keep = e;
            keep[3] -= 1;
            keep[4] -= 1;
            Exponents drop = keep;
            drop[0] -= 1;
            work[keep] += c;
            work[drop] -= c;
        } else {
            out.add(e, c);
        }
    }
    return out;
}

}  // namespace

CompiledPoly::CompiledPoly(const WirtingerPoly& lifted) {
    const WirtingerPoly poly = reduce_for_evaluation(lifted);
    exponents_.reserve(poly.size());
    coefs_.reserve(poly.size());
    for (const auto& [e, c] : poly.terms()) {
        exponents_.push_back(e);
        coefs_.push_back(c);
        max_exponent_ = std::max({max_exponent_, e[0], e[1], e[2], e[3], e[4]});
    }
}

Complex CompiledPoly::operator()(Complex z) const {
    return (*this)(z, 1.0 - z, (1.0 - std::abs(z)) * (1.0 + std::abs(z)));
}

Complex CompiledPoly::operator()(Complex z, Complex one_minus_z, double defect) const {
    constexpr int kTable = 4 * kMaxDerivOrder + 2;
    if (max_exponent_ >= kTable) throw InvariantError("CompiledPoly: exponent too large");
    const Complex v = 1.0 / one_minus_z;
    const std::array<Complex, 5> base = {1.0 / defect, v, std::conj(v), z, std::conj(z)};
    std::array<std::array<Complex, kTable>, 5> powers;
    for (std::size_t v = 0; v < 5; ++v) {
        powers[v][0] = 1.0;
        for (int j = 1; j <= max_exponent_; ++j) powers[v][j] = powers[v][j - 1] * base[v];
    }
    CompensatedSum sum;
    for (std::size_t i = 0; i < coefs_.size(); ++i) {
        const auto& e = exponents_[i];
        Complex term = coefs_[i];
        for (std::size_t v = 0; v < 5; ++v) term *= powers[v][static_cast<std::size_t>(e[v])];
        sum.add(term);
    }
    return sum.value();
}

Complex eval_poly(const WirtingerPoly& poly, const DiskPoint& z) { return CompiledPoly(poly)(z.z()); }

Complex deriv_u(const ParamPair& params, int k, int l, const DiskPoint& z) {
    return eval_poly(derive_poly(params, k, l), z) * u_ab(params, z);
}

double poly_bound_constant(const WirtingerPoly& poly) {
    if (poly.homogeneous_degree() < 0) throw InvariantError("poly_bound_constant: polynomial is not homogeneous");
    double bound = 0.0;
    for (const auto& [e, c] : poly.terms()) bound += std::abs(c) * std::ldexp(1.0, e[kV] + e[kW]);
    return bound;
}

std::string to_json(const WirtingerPoly& poly) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms()) {
        out.push_back({{"exponents", e}, {"coef", {c.real() + 0.0, c.imag() + 0.0}}});
    }
    return out.dump();
}

}  // namespace abh
