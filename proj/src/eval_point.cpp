#include "kelvin/eval_point.hpp"

#include "kelvin/errors.hpp"

#include <cmath>
#include <numbers>

namespace kelvin {

EvalPoint make_point(double x, double rho, double alpha) {
    if (!std::isfinite(x) || !std::isfinite(rho) || !std::isfinite(alpha)) {
        throw DomainError("make_point: non-finite coordinate");
    }
    if (x <= 0.0) throw DomainError("make_point: x must be > 0");
    if (rho <= 0.0) throw DomainError("make_point: rho must be > 0");
    // One ulp of slack so that alpha = pi/2 typed as a double is accepted.
    if (std::fabs(alpha) > 0.5 * std::numbers::pi * (1.0 + 1e-15)) {
        throw DomainError("make_point: |alpha| must be <= pi/2");
    }
    EvalPoint pt;
    pt.x = x;
    pt.rho = rho;
    pt.alpha = alpha;
    const double a = std::fabs(alpha);
    pt.M = x * x / (4.0 * rho);
    pt.p = 2.0 * rho / x;
    pt.c = std::cos(0.5 * a);
    pt.s = std::sin(0.5 * a);
    const double t = pt.s / pt.c;
    pt.u0 = pt.c * (1.0 - 0.5 * pt.p * pt.p * t * t);
    pt.xi0 = pt.u0 / pt.p;
    return pt;
}

}  // namespace kelvin
