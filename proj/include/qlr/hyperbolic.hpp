#pragma once

#include <cmath>
#include <ostream>

namespace qlr {

/// Split-complex number x + j y with j^2 = +1.
///
/// The squared modulus x^2 - y^2 may be zero or negative; polar form and
/// argument exist only on the positive cone G*+ = { z : x^2 - y^2 > 0 }.
struct HyperbolicNumber {
    double x = 0.0;
    double y = 0.0;

    constexpr HyperbolicNumber() = default;
    constexpr HyperbolicNumber(double re, double jpart = 0.0) : x(re), y(jpart) {}

    constexpr HyperbolicNumber &operator+=(const HyperbolicNumber &o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr HyperbolicNumber &operator-=(const HyperbolicNumber &o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr HyperbolicNumber &operator*=(const HyperbolicNumber &o) {
        const double nx = x * o.x + y * o.y;
        const double ny = x * o.y + o.x * y;
        x = nx;
        y = ny;
        return *this;
    }

    friend constexpr bool operator==(const HyperbolicNumber &, const HyperbolicNumber &) = default;
};

constexpr HyperbolicNumber operator+(HyperbolicNumber a, const HyperbolicNumber &b) { return a += b; }
constexpr HyperbolicNumber operator-(HyperbolicNumber a, const HyperbolicNumber &b) { return a -= b; }
constexpr HyperbolicNumber operator*(HyperbolicNumber a, const HyperbolicNumber &b) { return a *= b; }
constexpr HyperbolicNumber operator-(const HyperbolicNumber &a) { return {-a.x, -a.y}; }
constexpr HyperbolicNumber operator*(double s, const HyperbolicNumber &a) { return {s * a.x, s * a.y}; }
constexpr HyperbolicNumber operator*(const HyperbolicNumber &a, double s) { return s * a; }

constexpr HyperbolicNumber conj(const HyperbolicNumber &z) { return {z.x, -z.y}; }

/// x^2 - y^2, the scalar part of z * conj(z). Any sign.
constexpr double sq_abs(const HyperbolicNumber &z) { return z.x * z.x - z.y * z.y; }

constexpr bool in_closed_cone(const HyperbolicNumber &z) { return sq_abs(z) >= 0.0; }
constexpr bool in_open_cone(const HyperbolicNumber &z) { return sq_abs(z) > 0.0; }

/// cosh(theta) + j sinh(theta).
inline HyperbolicNumber hyperbolic_exp(double theta) { return {std::cosh(theta), std::sinh(theta)}; }

/// arctanh(y / x). Throws NotInPositiveCone outside G*+.
double arg(const HyperbolicNumber &z);

/// z = sign * modulus * hyperbolic_exp(theta), defined on G*+.
struct HyperbolicPolar {
    int sign = 1;
    double modulus = 0.0;
    double theta = 0.0;

    HyperbolicNumber value() const { return (sign * modulus) * hyperbolic_exp(theta); }
};

/// Throws NotInPositiveCone outside G*+.
HyperbolicPolar polar(const HyperbolicNumber &z);

/// Whether z1 + z2 stays in G*+, decided from the polar parts:
/// same sign always does; opposite signs do iff
/// arccosh((m1^2 + m2^2) / (2 m1 m2)) > |theta1 - theta2|.
bool cone_sum_check(const HyperbolicNumber &z1, const HyperbolicNumber &z2);

std::ostream &operator<<(std::ostream &os, const HyperbolicNumber &z);

} // namespace qlr
