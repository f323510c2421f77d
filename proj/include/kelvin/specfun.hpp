#pragma once

// Special-function kernels for the small-argument regime used by the
// Kelvin-source expansions: Bessel J, Y, I, K of integer order, scaled Struve
// functions, Kummer's 1F1 and the upper incomplete gamma function.
//
// Every kernel sums its defining series in double-double arithmetic and
// rounds once at the end, so cancellation inside the series does not reach
// the returned double for the argument ranges documented below.

#include <cmath>
#include <vector>

namespace kelvin {

/// Output of a special-function kernel.
struct SpecFunResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int terms_used = 0;
    /// (|a| + |b|) / |a - b| for kernels that subtract two computed
    /// quantities (scaled Struve K); 1 elsewhere.
    double cancellation = 1.0;
};

struct SpecFunConfig {
    /// Cap on the order of J, I and the Struve kernels. Y and K accept twice
    /// this, since the Bessho and Ursell series use K_m and Y_{2m}.
    int order_cap = 200;
};

/// Mantissa/exponent pair, value = mantissa * 2^exponent. Used for Bessel
/// sequences whose terms overflow or underflow a double while their
/// products stay representable.
struct ScaledValue {
    double mantissa = 0.0;
    int exponent = 0;

    double value() const { return std::ldexp(mantissa, exponent); }
    friend ScaledValue operator*(ScaledValue a, ScaledValue b) {
        return {a.mantissa * b.mantissa, a.exponent + b.exponent};
    }
};

namespace specfun {

/// Largest argument accepted by the Bessel and Struve kernels.
inline constexpr double kMaxArgument = 25.0;

SpecFunResult bessel_j(int order, double x, const SpecFunConfig& cfg = {});
SpecFunResult bessel_y(int order, double x, const SpecFunConfig& cfg = {});
SpecFunResult bessel_i(int order, double x, const SpecFunConfig& cfg = {});
SpecFunResult bessel_k(int order, double x, const SpecFunConfig& cfg = {});

/// J_0(x) .. J_nmax(x) by Miller's backward recurrence normalised with
/// J_0 + 2 sum J_2k = 1.
std::vector<ScaledValue> bessel_j_sequence(int nmax, double x);
/// I_0(x) .. I_nmax(x) by backward recurrence normalised to the series I_0.
std::vector<ScaledValue> bessel_i_sequence(int nmax, double x);
/// K_0(x) .. K_nmax(x) by upward recurrence.
std::vector<ScaledValue> bessel_k_sequence(int nmax, double x);
/// Y_0(x) .. Y_nmax(x) by upward recurrence.
std::vector<ScaledValue> bessel_y_sequence(int nmax, double x);

/// Scaled Struve function (x/2)^{-r} H_r(x).
SpecFunResult struve_h_scaled(int order, double x, const SpecFunConfig& cfg = {});

/// x^m (H_m(x) - Y_m(x)), the scaled Struve K function.
SpecFunResult struve_k_scaled(int order, double x, const SpecFunConfig& cfg = {});

/// Kummer's confluent hypergeometric function 1F1(a; b; z), |z| <= 50.
SpecFunResult kummer_1f1(double a, double b, double z);

/// Gamma(a, chi) for a >= 0, chi > 0.
SpecFunResult upper_inc_gamma(double a, double chi);

/// Gamma(a, chi) * e^chi * chi^{-a}. Stays O(1) where Gamma(a, chi) itself
/// would overflow.
SpecFunResult upper_inc_gamma_scaled(double a, double chi);

}  // namespace specfun
}  // namespace kelvin
