#include "abh/types.hpp"

#include <algorithm>
#include <cstdio>

namespace abh {

double distance_to_pole(Complex z) noexcept {
    const double nearest = std::min(0.0, std::round(z.real()));
    return std::abs(z - nearest);
}

ParamPair::ParamPair(Complex alpha, Complex beta)
    : alpha_(alpha), beta_(beta), lambda1_(std::abs(alpha + 1.0)), lambda2_(std::abs(beta + 1.0)) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) || !std::isfinite(beta.real()) ||
        !std::isfinite(beta.imag())) {
        throw DomainError("ParamPair: non-finite parameter");
    }
    if (!(alpha.real() + beta.real() > -1.0 + kPoleGuard)) {
        throw DomainError("ParamPair: need Re(alpha) + Re(beta) > -1");
    }
    if (distance_to_pole(alpha + 1.0) < kPoleGuard || distance_to_pole(beta + 1.0) < kPoleGuard) {
        throw DomainError("ParamPair: alpha and beta must avoid -1, -2, ...");
    }
}

DiskPoint::DiskPoint(Complex z) : z_(z), modulus_(std::abs(z)), defect_(0.0) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(modulus_ < 1.0 - 1e-12)) {
        throw DomainError("DiskPoint: need |z| < 1");
    }
    defect_ = (1.0 - modulus_) * (1.0 + modulus_);
}

CirclePoint::CirclePoint(double t) : t_(0.0) {
    if (!std::isfinite(t)) throw DomainError("CirclePoint: non-finite angle");
    t_ = std::remainder(t, 2.0 * kPi);
    if (t_ >= kPi) t_ -= 2.0 * kPi;
}

std::string to_string(Complex z) {
    auto fmt = [](double v) {
        if (v == 0.0) v = 0.0;  // drop the sign of -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    std::string out = fmt(z.real());
    if (z.imag() != 0.0) {
        out += z.imag() < 0.0 ? "-" : "+";
        out += fmt(std::abs(z.imag()));
        out += "i";
    }
    return out;
}

}  // namespace abh
