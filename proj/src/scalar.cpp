#include "qlr/scalar.hpp"

#include "qlr/errors.hpp"

#include <algorithm>
#include <string>

namespace qlr {

std::string_view to_string(Field f) { return f == Field::complex ? "complex" : "hyperbolic"; }

Field field_from_string(std::string_view s) {
    if (s == "complex") {
        return Field::complex;
    }
    if (s == "hyperbolic") {
        return Field::hyperbolic;
    }
    throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected complex or hyperbolic)");
}

namespace {

void require_same_field(const Scalar &a, const Scalar &b) {
    if (a.field() != b.field()) {
        throw KindMismatch("cannot combine a " + std::string(to_string(a.field())) + " scalar with a " +
                           std::string(to_string(b.field())) + " scalar");
    }
}

} // namespace

ComplexNumber Scalar::as_complex() const {
    if (field_ != Field::complex) {
        throw KindMismatch("scalar is hyperbolic, not complex");
    }
    return {re_, im_};
}

HyperbolicNumber Scalar::as_hyperbolic() const {
    if (field_ != Field::hyperbolic) {
        throw KindMismatch("scalar is complex, not hyperbolic");
    }
    return {re_, im_};
}

Scalar &Scalar::operator+=(const Scalar &o) {
    require_same_field(*this, o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    require_same_field(*this, o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    require_same_field(*this, o);
    const double sign = field_ == Field::complex ? -1.0 : 1.0;
    const double re = re_ * o.re_ + sign * im_ * o.im_;
    const double im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Scalar &z) {
    const char unit = z.field() == Field::complex ? 'i' : 'j';
    return os << z.re() << (z.im() < 0 ? " - " : " + ") << std::abs(z.im()) << unit;
}

Vec3 zero_vector(Field f) { return {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)}; }

Mat3 zero_matrix(Field f) { return {zero_vector(f), zero_vector(f), zero_vector(f)}; }

Mat3 identity_matrix(Field f) {
    Mat3 m = zero_matrix(f);
    for (int k = 0; k < 3; ++k) {
        m[k][k] = Scalar::one(f);
    }
    return m;
}

Scalar inner(const Vec3 &x, const Vec3 &y) {
    Scalar acc = Scalar::zero(x[0].field());
    for (int k = 0; k < 3; ++k) {
        acc += conj(x[k]) * y[k];
    }
    return acc;
}

double sq_norm(const Vec3 &x) { return inner(x, x).re(); }

Vec3 column(const Mat3 &m, int col) { return {m[0][col], m[1][col], m[2][col]}; }

Mat3 adjoint(const Mat3 &m) {
    Mat3 out = m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out[r][c] = conj(m[c][r]);
        }
    }
    return out;
}

Mat3 operator*(const Mat3 &a, const Mat3 &b) {
    Mat3 out = zero_matrix(a[0][0].field());
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            for (int k = 0; k < 3; ++k) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

Mat3 gram(const Mat3 &m) { return adjoint(m) * m; }

double max_deviation_from_identity(const Mat3 &m) {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            const Scalar target = r == c ? Scalar::one(m[r][c].field()) : Scalar::zero(m[r][c].field());
            worst = std::max(worst, component_norm(m[r][c] - target));
        }
    }
    return worst;
}

} // namespace qlr
