#include "qlr/hyperbolic.hpp"

#include "qlr/errors.hpp"

#include <sstream>

namespace qlr {

namespace {

void require_open_cone(const HyperbolicNumber &z, const char *op) {
    if (!(sq_abs(z) > 0.0)) {
        std::ostringstream os;
        os << op << ": " << z << " has x^2 - y^2 = " << sq_abs(z) << " <= 0";
        throw NotInPositiveCone(os.str());
    }
}

} // namespace

double arg(const HyperbolicNumber &z) {
    require_open_cone(z, "arg");
    // sq_abs > 0 forces |y| < |x|, so y / x is strictly inside (-1, 1).
    return std::atanh(z.y / z.x);
}

HyperbolicPolar polar(const HyperbolicNumber &z) {
    require_open_cone(z, "polar");
    return {z.x > 0.0 ? 1 : -1, std::sqrt(sq_abs(z)), std::atanh(z.y / z.x)};
}

bool cone_sum_check(const HyperbolicNumber &z1, const HyperbolicNumber &z2) {
    const HyperbolicPolar p1 = polar(z1);
    const HyperbolicPolar p2 = polar(z2);
    if (p1.sign * p2.sign == 1) {
        return true;
    }
    const double ratio = (p1.modulus * p1.modulus + p2.modulus * p2.modulus) /
                         (2.0 * p1.modulus * p2.modulus);
    return std::acosh(ratio) > std::abs(p1.theta - p2.theta);
}

std::ostream &operator<<(std::ostream &os, const HyperbolicNumber &z) {
    return os << '(' << z.x << (z.y < 0 ? " - " : " + ") << std::abs(z.y) << "j)";
}

} // namespace qlr
