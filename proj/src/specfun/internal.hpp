#pragma once

#include "kelvin/detail/double_double.hpp"

#include <cmath>
#include <limits>

namespace kelvin::specfun::internal {

using detail::DoubleDouble;

/// Relative precision of a double-double value.
inline constexpr double kDDEps = 1.2e-32;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SeriesOutcome {
    DoubleDouble sum;
    double max_term = 0.0;  // largest |term| seen, for rounding estimates
    double truncation = 0.0;  // bound on the omitted tail
    int terms = 0;
};

/// Power series sum_{k>=0} (x/2)^{2k+n} s^k / (k! (n+k)!) with s = -1 (J) or
/// s = +1 (I), in double-double.
SeriesOutcome bessel_power_series(int n, double x, int sign);

DoubleDouble bessel_y_dd(int n, double x);
DoubleDouble bessel_k_dd(int n, double x);

/// Scaled Struve series; stops once the next term is below rel_stop times the
/// partial sum and the terms are decreasing.
SeriesOutcome struve_h_scaled_series(int r, double x, double rel_stop);

/// ln(x/2) carried to long-double precision.
DoubleDouble log_half(double x);

/// abs(a) as a double.
inline double mag(DoubleDouble a) { return std::fabs(a.hi); }

}  // namespace kelvin::specfun::internal
