#include "kelvin/specfun.hpp"

#include "internal.hpp"
#include "kelvin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kelvin::specfun {

using detail::DoubleDouble;
using detail::two_prod;
namespace ddc = detail::dd_const;

namespace internal {

DoubleDouble log_half(double x) {
    return detail::from_long_double(std::log(static_cast<long double>(x) / 2.0L));
}

SeriesOutcome bessel_power_series(int n, double x, int sign) {
    SeriesOutcome out;
    const double h = x / 2.0;
    DoubleDouble t = 1.0;
    for (int j = 1; j <= n; ++j) {
        t = t * h / static_cast<double>(j);
    }
    const DoubleDouble q = two_prod(h, h) * static_cast<double>(sign);
    const double q_abs = std::fabs(q.hi);

    out.sum = t;
    out.max_term = mag(t);
    out.terms = 1;
    for (int k = 0; k < 1000; ++k) {
        const double denom = static_cast<double>(k + 1) * static_cast<double>(k + 1 + n);
        t = t * q / denom;
        const bool decreasing = q_abs < denom;
        if (decreasing && mag(t) <= kDDEps * mag(out.sum)) {
            out.truncation = 2.0 * mag(t);
            return out;
        }
        out.sum += t;
        out.max_term = std::max(out.max_term, mag(t));
        ++out.terms;
    }
    out.truncation = mag(t);
    return out;
}

namespace {

// sum_{k>=1} H_k t_k with t_k = t_{k-1} q / k^2, t_0 = 1 (Y0/K0 companion sum).
DoubleDouble harmonic_series_order0(DoubleDouble q, double x) {
    DoubleDouble harmonic = 0.0;
    DoubleDouble t = 1.0;
    DoubleDouble sum = 0.0;
    const double q_abs = std::fabs(q.hi);
    for (int k = 1; k < 1000; ++k) {
        const double kk = static_cast<double>(k);
        harmonic += DoubleDouble(1.0) / kk;
        t = t * q / (kk * kk);
        const DoubleDouble term = harmonic * t;
        sum += term;
        if (q_abs < kk * kk && mag(term) <= kDDEps * mag(sum) && kk > x) break;
    }
    return sum;
}

// sum_{k>=0} (H_k + H_{k+1}) t_k with t_k = t_{k-1} q / (k (k+1)), t_0 = 1.
DoubleDouble harmonic_series_order1(DoubleDouble q, double x) {
    DoubleDouble h_k = 0.0;
    DoubleDouble h_k1 = 1.0;
    DoubleDouble t = 1.0;
    DoubleDouble sum = h_k1;
    const double q_abs = std::fabs(q.hi);
    for (int k = 1; k < 1000; ++k) {
        const double kk = static_cast<double>(k);
        h_k = h_k1;
        h_k1 = h_k1 + DoubleDouble(1.0) / (kk + 1.0);
        t = t * q / (kk * (kk + 1.0));
        const DoubleDouble term = (h_k + h_k1) * t;
        sum += term;
        if (q_abs < kk * (kk + 1.0) && mag(term) <= kDDEps * mag(sum) && kk > x) break;
    }
    return sum;
}

}  // namespace

DoubleDouble bessel_y_dd(int n, double x) {
    const double h = x / 2.0;
    const DoubleDouble q = -two_prod(h, h);
    const DoubleDouble log_term = log_half(x) + ddc::euler_gamma;

    const DoubleDouble j0 = bessel_power_series(0, x, -1).sum;
    const DoubleDouble y0 = ddc::two_over_pi * (log_term * j0 - harmonic_series_order0(q, x));
    if (n == 0) return y0;

    const DoubleDouble j1 = bessel_power_series(1, x, -1).sum;
    const DoubleDouble y1 = ddc::two_over_pi * (log_term * j1 - DoubleDouble(1.0) / x)
                            - h * ddc::inv_pi * harmonic_series_order1(q, x);
    if (n == 1) return y1;

    DoubleDouble prev = y0;
    DoubleDouble cur = y1;
    for (int k = 1; k < n; ++k) {
        const DoubleDouble next = (DoubleDouble(2.0 * k) / x) * cur - prev;
        prev = cur;
        cur = next;
        if (!std::isfinite(cur.hi)) break;
    }
    return cur;
}

DoubleDouble bessel_k_dd(int n, double x) {
    const double h = x / 2.0;
    const DoubleDouble q = two_prod(h, h);
    const DoubleDouble log_term = log_half(x) + ddc::euler_gamma;

    const DoubleDouble i0 = bessel_power_series(0, x, +1).sum;
    const DoubleDouble k0 = harmonic_series_order0(q, x) - log_term * i0;
    if (n == 0) return k0;

    const DoubleDouble i1 = bessel_power_series(1, x, +1).sum;
    const DoubleDouble k1 = DoubleDouble(1.0) / x + log_term * i1
                            - (h / 2.0) * harmonic_series_order1(q, x);
    if (n == 1) return k1;

    DoubleDouble prev = k0;
    DoubleDouble cur = k1;
    for (int k = 1; k < n; ++k) {
        const DoubleDouble next = prev + (DoubleDouble(2.0 * k) / x) * cur;
        prev = cur;
        cur = next;
        if (!std::isfinite(cur.hi)) break;
    }
    return cur;
}

}  // namespace internal

namespace {

using internal::kDDEps;
using internal::kEps;

void check_order(int order, int cap, const char* name) {
    if (order < 0) {
        throw DomainError(std::string(name) + ": negative order");
    }
    if (order > cap) {
        throw OrderOverflow(std::string(name) + ": order " + std::to_string(order)
                            + " exceeds cap " + std::to_string(cap));
    }
}

void check_argument(double x, bool allow_zero, const char* name) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(name) + ": non-finite argument");
    }
    if (allow_zero ? x < 0.0 : x <= 0.0) {
        throw DomainError(std::string(name) + (allow_zero ? ": argument must be >= 0"
                                                          : ": argument must be > 0"));
    }
    if (x > kMaxArgument) {
        throw DomainError(std::string(name) + ": argument beyond the small-argument kernels");
    }
}

SpecFunResult from_series(const internal::SeriesOutcome& s) {
    SpecFunResult r;
    r.value = s.sum.to_double();
    r.abs_error_estimate = s.truncation + kDDEps * s.max_term * s.terms
                           + 0.5 * kEps * std::fabs(r.value);
    r.terms_used = s.terms;
    return r;
}

SpecFunResult from_recurrence(DoubleDouble v, int order, const char* name) {
    if (!std::isfinite(v.hi)) {
        throw OrderOverflow(std::string(name) + ": value overflows double at order "
                            + std::to_string(order));
    }
    SpecFunResult r;
    r.value = v.to_double();
    // Input log term carries long-double precision; the recurrence itself is
    // forward-stable for the dominant solution.
    r.abs_error_estimate = std::fabs(r.value) * (0.5 * kEps + 1e-18 * (order + 1));
    r.terms_used = std::max(order, 1);
    return r;
}

inline ScaledValue rescaled(double m, int e) {
    int shift = 0;
    const double frac = std::frexp(m, &shift);
    return {frac, e + shift};
}

// Leading two terms of the power series, built multiplicatively so that no
// intermediate under- or overflows. Valid to ~1e-24 relative for x < 1e-6.
std::vector<ScaledValue> small_argument_sequence(int nmax, double x, int sign) {
    std::vector<ScaledValue> out(static_cast<std::size_t>(nmax) + 1);
    const double h = x / 2.0;
    ScaledValue lead{1.0, 0};
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) lead = rescaled(lead.mantissa * h / n, lead.exponent);
        const double corr = 1.0 + sign * h * h / (n + 1);
        out[static_cast<std::size_t>(n)] = rescaled(lead.mantissa * corr, lead.exponent);
    }
    return out;
}

constexpr double kRescaleThreshold = 0x1p500;

// Backward recurrence f_{k-1} = (2k/x) f_k + sign f_{k+1} from a seed far
// above nmax. Returns unnormalised values (with per-entry exponent) and the
// value at k = 0; `even_sum` accumulates f_0 + 2 sum f_{2k} in final units.
struct BackwardRun {
    std::vector<ScaledValue> values;
    int final_exponent = 0;
    double even_sum = 0.0;
};

BackwardRun backward_recurrence(int nmax, double x, int sign) {
    BackwardRun run;
    run.values.resize(static_cast<std::size_t>(nmax) + 1);
    const int top = std::max(nmax, static_cast<int>(std::ceil(x)));
    int start = top + 20 + static_cast<int>(std::sqrt(60.0 * top));
    if (start % 2 != 0) ++start;

    double f_next = 0.0;
    double f = 1e-30;
    int e = 0;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        if (k <= nmax) run.values[static_cast<std::size_t>(k)] = {f, e};
        if (k % 2 == 0) norm += 2.0 * f;
        const double f_prev = (2.0 * k / x) * f + sign * f_next;
        f_next = f;
        f = f_prev;
        if (std::fabs(f) > kRescaleThreshold) {
            f = std::ldexp(f, -500);
            f_next = std::ldexp(f_next, -500);
            norm = std::ldexp(norm, -500);
            e += 500;
        }
    }
    run.values[0] = {f, e};
    run.final_exponent = e;
    run.even_sum = norm + f;
    return run;
}

void check_sequence_args(int nmax, double x, bool allow_zero, const char* name) {
    if (nmax < 0) throw DomainError(std::string(name) + ": negative nmax");
    check_argument(x, allow_zero, name);
}

}  // namespace

SpecFunResult bessel_j(int order, double x, const SpecFunConfig& cfg) {
    check_order(order, cfg.order_cap, "bessel_j");
    check_argument(x, true, "bessel_j");
    return from_series(internal::bessel_power_series(order, x, -1));
}

SpecFunResult bessel_i(int order, double x, const SpecFunConfig& cfg) {
    check_order(order, cfg.order_cap, "bessel_i");
    check_argument(x, true, "bessel_i");
    return from_series(internal::bessel_power_series(order, x, +1));
}

SpecFunResult bessel_y(int order, double x, const SpecFunConfig& cfg) {
    check_order(order, 2 * cfg.order_cap, "bessel_y");
    check_argument(x, false, "bessel_y");
    return from_recurrence(internal::bessel_y_dd(order, x), order, "bessel_y");
}

SpecFunResult bessel_k(int order, double x, const SpecFunConfig& cfg) {
    check_order(order, 2 * cfg.order_cap, "bessel_k");
    check_argument(x, false, "bessel_k");
    return from_recurrence(internal::bessel_k_dd(order, x), order, "bessel_k");
}

std::vector<ScaledValue> bessel_j_sequence(int nmax, double x) {
    check_sequence_args(nmax, x, true, "bessel_j_sequence");
    if (x == 0.0) {
        std::vector<ScaledValue> out(static_cast<std::size_t>(nmax) + 1);
        out[0] = {1.0, 0};
        return out;
    }
    if (x < 1e-6) return small_argument_sequence(nmax, x, -1);

    BackwardRun run = backward_recurrence(nmax, x, -1);
    for (auto& v : run.values) {
        v = rescaled(v.mantissa / run.even_sum, v.exponent - run.final_exponent);
    }
    return run.values;
}

std::vector<ScaledValue> bessel_i_sequence(int nmax, double x) {
    check_sequence_args(nmax, x, true, "bessel_i_sequence");
    if (x == 0.0) {
        std::vector<ScaledValue> out(static_cast<std::size_t>(nmax) + 1);
        out[0] = {1.0, 0};
        return out;
    }
    if (x < 1e-6) return small_argument_sequence(nmax, x, +1);

    BackwardRun run = backward_recurrence(nmax, x, +1);
    const double i0 = internal::bessel_power_series(0, x, +1).sum.to_double();
    const ScaledValue f0 = run.values[0];
    for (auto& v : run.values) {
        v = rescaled(v.mantissa / f0.mantissa * i0, v.exponent - f0.exponent);
    }
    return run.values;
}

std::vector<ScaledValue> bessel_k_sequence(int nmax, double x) {
    check_sequence_args(nmax, x, false, "bessel_k_sequence");
    std::vector<ScaledValue> out(static_cast<std::size_t>(nmax) + 1);
    double prev = internal::bessel_k_dd(0, x).to_double();
    out[0] = rescaled(prev, 0);
    if (nmax == 0) return out;
    double cur = internal::bessel_k_dd(1, x).to_double();
    out[1] = rescaled(cur, 0);
    int e = 0;
    for (int m = 1; m < nmax; ++m) {
        const double next = prev + (2.0 * m / x) * cur;
        prev = cur;
        cur = next;
        if (std::fabs(cur) > kRescaleThreshold) {
            cur = std::ldexp(cur, -500);
            prev = std::ldexp(prev, -500);
            e += 500;
        }
        out[static_cast<std::size_t>(m) + 1] = rescaled(cur, e);
    }
    return out;
}

std::vector<ScaledValue> bessel_y_sequence(int nmax, double x) {
    check_sequence_args(nmax, x, false, "bessel_y_sequence");
    std::vector<ScaledValue> out(static_cast<std::size_t>(nmax) + 1);
    double prev = internal::bessel_y_dd(0, x).to_double();
    out[0] = rescaled(prev, 0);
    if (nmax == 0) return out;
    double cur = internal::bessel_y_dd(1, x).to_double();
    out[1] = rescaled(cur, 0);
    int e = 0;
    for (int m = 1; m < nmax; ++m) {
        const double next = (2.0 * m / x) * cur - prev;
        prev = cur;
        cur = next;
        if (std::fabs(cur) > kRescaleThreshold) {
            cur = std::ldexp(cur, -500);
            prev = std::ldexp(prev, -500);
            e += 500;
        }
        out[static_cast<std::size_t>(m) + 1] = rescaled(cur, e);
    }
    return out;
}

}  // namespace kelvin::specfun
