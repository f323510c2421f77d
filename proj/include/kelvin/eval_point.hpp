#pragma once

namespace kelvin {

/// Field point (x, rho, alpha) of the Kelvin source integral together with
/// the derived parameters of the small-x, small-rho expansions. Derived
/// quantities use |alpha|, since F is even in alpha.
struct EvalPoint {
    double x = 0.0;
    double rho = 0.0;
    double alpha = 0.0;

    double M = 0.0;   ///< x^2 / (4 rho)
    double p = 0.0;   ///< 2 rho / x
    double c = 1.0;   ///< cos(|alpha| / 2)
    double s = 0.0;   ///< sin(|alpha| / 2)
    double u0 = 1.0;  ///< c (1 - p^2 tan^2(|alpha|/2) / 2)
    double xi0 = 0.0; ///< u0 / p = 2 M u0 / x

    double abs_alpha() const { return alpha < 0.0 ? -alpha : alpha; }
};

/// Throws DomainError unless x > 0, rho > 0 and |alpha| <= pi/2.
EvalPoint make_point(double x, double rho, double alpha);

}  // namespace kelvin
