#pragma once

#include "qlr/hyperbolic.hpp"

#include <array>
#include <complex>
#include <ostream>
#include <string_view>

namespace qlr {

using ComplexNumber = std::complex<double>;

/// Which algebra amplitudes live in: i^2 = -1 or j^2 = +1.
enum class Field { complex, hyperbolic };

std::string_view to_string(Field f);
Field field_from_string(std::string_view s);

/// Tagged scalar: a complex or a split-complex number.
///
/// Both fields share the (re, im) storage; only multiplication and the
/// squared modulus differ. Combining scalars of different fields throws
/// KindMismatch.
class Scalar {
  public:
    constexpr Scalar() = default;
    constexpr Scalar(Field field, double re, double im = 0.0) : field_(field), re_(re), im_(im) {}
    constexpr Scalar(const ComplexNumber &z) : field_(Field::complex), re_(z.real()), im_(z.imag()) {}
    constexpr Scalar(const HyperbolicNumber &z) : field_(Field::hyperbolic), re_(z.x), im_(z.y) {}

    static constexpr Scalar zero(Field f) { return {f, 0.0, 0.0}; }
    static constexpr Scalar one(Field f) { return {f, 1.0, 0.0}; }

    constexpr Field field() const { return field_; }
    constexpr double re() const { return re_; }
    /// Coefficient of i (complex) or j (hyperbolic).
    constexpr double im() const { return im_; }

    ComplexNumber as_complex() const;
    HyperbolicNumber as_hyperbolic() const;

    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator*=(double s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }

    friend bool operator==(const Scalar &, const Scalar &) = default;

  private:
    Field field_ = Field::complex;
    double re_ = 0.0;
    double im_ = 0.0;
};

inline Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
inline Scalar operator*(Scalar a, double s) { return a *= s; }
inline Scalar operator*(double s, Scalar a) { return a *= s; }
inline Scalar operator-(const Scalar &a) { return {a.field(), -a.re(), -a.im()}; }

inline Scalar conj(const Scalar &z) { return {z.field(), z.re(), -z.im()}; }

/// |z|^2 in the scalar's own field: re^2 + im^2 or re^2 - im^2.
inline double sq_abs(const Scalar &z) {
    return z.field() == Field::complex ? z.re() * z.re() + z.im() * z.im()
                                       : z.re() * z.re() - z.im() * z.im();
}

/// Euclidean size of the coefficient pair; used for residual norms only.
inline double component_norm(const Scalar &z) { return std::hypot(z.re(), z.im()); }

std::ostream &operator<<(std::ostream &os, const Scalar &z);

// -- 3-dimensional vectors and matrices over a Scalar field ------------------

using Vec3 = std::array<Scalar, 3>;
/// Row-major: m[row][col].
using Mat3 = std::array<std::array<Scalar, 3>, 3>;

Vec3 zero_vector(Field f);
Mat3 zero_matrix(Field f);
Mat3 identity_matrix(Field f);

/// Inner product <x|y> = sum_k conj(x_k) y_k, conjugate-linear in x.
Scalar inner(const Vec3 &x, const Vec3 &y);
/// <x|x>, real in both fields (possibly negative for hyperbolic vectors).
double sq_norm(const Vec3 &x);

Vec3 column(const Mat3 &m, int col);
Mat3 adjoint(const Mat3 &m);
Mat3 operator*(const Mat3 &a, const Mat3 &b);

/// M* M, the Gram matrix of the columns.
Mat3 gram(const Mat3 &m);

/// max over entries of component_norm(m - I).
double max_deviation_from_identity(const Mat3 &m);

} // namespace qlr
