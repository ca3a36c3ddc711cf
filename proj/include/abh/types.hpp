#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace abh {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Distance from a pole (nonpositive integer) below which Gamma-based
// quantities are rejected.
inline constexpr double kPoleGuard = 1e-9;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument too close to a Gamma pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Periodic quadrature failed to reach its tolerance within the node cap.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Requested derivative order exceeds the supported depth.
class DepthError : public Error {
public:
    using Error::Error;
};

/// A data structure invariant does not hold.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Parameters (alpha, beta) of the weighted Laplacian L_{alpha,beta}.
///
/// Construction enforces Re(alpha) + Re(beta) > -1 and that neither parameter
/// is a negative integer. The derived moduli |alpha+1| and |beta+1| appear in
/// almost every constant, so they are cached.
class ParamPair {
public:
    ParamPair(Complex alpha, Complex beta);

    Complex alpha() const noexcept { return alpha_; }
    Complex beta() const noexcept { return beta_; }
    double lambda1() const noexcept { return lambda1_; }
    double lambda2() const noexcept { return lambda2_; }

    /// Re(alpha) + Re(beta).
    double re_sum() const noexcept { return alpha_.real() + beta_.real(); }

    /// |Im(alpha) - Im(beta)|.
    double im_gap() const noexcept { return std::abs(alpha_.imag() - beta_.imag()); }

    /// Swapped pair (beta, alpha).
    ParamPair swapped() const { return ParamPair(beta_, alpha_); }

private:
    Complex alpha_;
    Complex beta_;
    double lambda1_;
    double lambda2_;
};

/// A point of the open unit disc, with 1 - |z|^2 computed once.
class DiskPoint {
public:
    explicit DiskPoint(Complex z);

    Complex z() const noexcept { return z_; }
    double modulus() const noexcept { return modulus_; }
    /// 1 - |z|^2, evaluated as (1 - |z|)(1 + |z|).
    double defect() const noexcept { return defect_; }

private:
    Complex z_;
    double modulus_;
    double defect_;
};

/// A point e^{it} of the unit circle, t normalised to [-pi, pi).
class CirclePoint {
public:
    explicit CirclePoint(double t);

    double angle() const noexcept { return t_; }
    Complex zeta() const noexcept { return {std::cos(t_), std::sin(t_)}; }

private:
    double t_;
};

/// The two Wirtinger derivatives of a function at a point.
struct DerivPair {
    Complex dz;
    Complex dzbar;

    /// Operator norm of the real differential: |f_z| + |f_zbar|.
    double norm() const noexcept { return std::abs(dz) + std::abs(dzbar); }
};

/// Distance from z to the nearest nonpositive integer.
double distance_to_pole(Complex z) noexcept;

/// Formats z with 12 significant digits as "a", "a+bi" or "a-bi".
std::string to_string(Complex z);

}  // namespace abh
