#pragma once

#include <functional>
#include <limits>
#include <span>

namespace kelvin {

struct QuadResult {
    double value = 0.0;
    /// Includes the truncation-tail bound when the range was cut.
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    /// Where an infinite range was cut; NaN for finite ranges.
    double truncation_point = std::numeric_limits<double>::quiet_NaN();
};

/// Square-root endpoint weights the integrator applies analytically.
enum class EndpointWeight {
    none,
    left,   ///< (t - a)^{-1/2}
    right,  ///< (b - t)^{-1/2}
    both,   ///< (t - a)^{-1/2} (b - t)^{-1/2}
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    EndpointWeight weight = EndpointWeight::none;
    long max_evaluations = 1'000'000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 10/21-point Gauss-Kronrod quadrature of f(t) w(t) over
/// [a, b], where w is the declared endpoint weight and f its smooth cofactor.
/// The weight is removed by t = a + (b-a) sin(theta)-type substitutions, so f
/// is never evaluated at a singular endpoint.
///
/// Throws AccuracyNotReached (carrying the best estimate) when the
/// evaluation budget runs out before max(abs_tol, rel_tol |value|) is met.
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadOptions& opts = {});

/// As above, with the range pre-split at the given strictly increasing
/// breakpoints (first and last are the endpoints). Used for oscillatory
/// integrands whose oscillation structure is known in advance.
QuadResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadOptions& opts = {});

/// Integral of f over [a, inf). The range is cut at the first T = a + step * 2^j
/// with tail_bound(T) <= 0.01 * abs_tol; tail_bound(T) must bound
/// |int_T^inf f| and is added to the reported error.
QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 const std::function<double(double)>& tail_bound,
                                 double step, const QuadOptions& opts = {});

}  // namespace kelvin
