#include "qlr/phase.hpp"

#include "qlr/errors.hpp"

#include <cmath>

namespace qlr {

Scalar phase_value(const PhaseFactor &lambda) {
    if (lambda.kind == PhaseKind::trig) {
        return {Field::complex, std::cos(lambda.theta), std::sin(lambda.theta)};
    }
    const double s = lambda.sign;
    return {Field::hyperbolic, s * std::cosh(lambda.theta), s * std::sinh(lambda.theta)};
}

double phase_pair_real(const PhaseFactor &l1, const PhaseFactor &l2) {
    if (l1.kind != l2.kind) {
        throw KindMismatch("phase_pair_real: trigonometric and hyperbolic phase factors mixed");
    }
    const double d = l1.theta - l2.theta;
    if (l1.kind == PhaseKind::trig) {
        return std::cos(d);
    }
    return l1.sign * l2.sign * std::cosh(d);
}

} // namespace qlr
