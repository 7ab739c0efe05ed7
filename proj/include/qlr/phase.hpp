#pragma once

#include "qlr/scalar.hpp"

namespace qlr {

enum class PhaseKind { trig, hyper };

constexpr Field field_of(PhaseKind k) { return k == PhaseKind::trig ? Field::complex : Field::hyperbolic; }
constexpr PhaseKind kind_of(Field f) { return f == Field::complex ? PhaseKind::trig : PhaseKind::hyper; }

/// Unit-modulus factor: e^{i theta} (trig) or sign * e^{j theta} (hyper).
struct PhaseFactor {
    PhaseKind kind = PhaseKind::trig;
    double theta = 0.0;
    int sign = 1;

    static constexpr PhaseFactor trig(double theta) { return {PhaseKind::trig, theta, 1}; }
    static constexpr PhaseFactor hyper(int sign, double theta) { return {PhaseKind::hyper, theta, sign}; }
};

/// cos + i sin, or sign * (cosh + j sinh).
Scalar phase_value(const PhaseFactor &lambda);

/// (l1 conj(l2) + l2 conj(l1)) / 2: cos(t1 - t2) or s1 s2 cosh(t1 - t2).
/// Throws KindMismatch for factors of different kinds.
double phase_pair_real(const PhaseFactor &l1, const PhaseFactor &l2);

} // namespace qlr
