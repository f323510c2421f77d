#include "kelvin/specfun.hpp"

#include "internal.hpp"
#include "kelvin/errors.hpp"

#include <cmath>
#include <limits>

namespace kelvin::specfun {

using detail::DoubleDouble;

namespace {

constexpr double kMaxA = 300.0;
constexpr double kMaxChi = 700.0;
constexpr double kTiny = 1e-300;

bool is_integer(double a) { return a == std::floor(a); }

// e^chi chi^{-n} Gamma(n, chi) = sum_{k<n} (n-1)!/k! chi^{k-n}, summed from the
// top index down so every partial product stays O(1).
double scaled_integer(int n, double chi, int& terms) {
    DoubleDouble sum = 0.0;
    double t = 1.0 / chi;
    for (int k = n - 1; k >= 0; --k) {
        sum += t;
        t *= static_cast<double>(k) / chi;
    }
    terms = n;
    return sum.to_double();
}

// Modified Lentz evaluation of the continued fraction for e^chi chi^{-a} Gamma(a, chi).
double scaled_continued_fraction(double a, double chi, int& terms) {
    double b = chi + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 0.5 * internal::kEps) {
            terms = i;
            return h;
        }
    }
    throw AccuracyNotReached("upper_inc_gamma: continued fraction did not converge", h, 0.0);
}

// e^chi chi^{-a} gamma(a, chi) = sum_{k>=0} chi^k / (a (a+1) ... (a+k)).
double scaled_lower_series(double a, double chi, int& terms) {
    DoubleDouble term = DoubleDouble(1.0) / a;
    DoubleDouble sum = term;
    for (int k = 1; k < 10000; ++k) {
        term = term * chi / (a + k);
        sum += term;
        if (internal::mag(term) < internal::kDDEps * internal::mag(sum)) {
            terms = k + 1;
            return sum.to_double();
        }
    }
    throw AccuracyNotReached("upper_inc_gamma: series did not converge", sum.to_double(), 0.0);
}

// E_1(chi) for chi <= 1 by its power series.
double exp_integral_e1_series(double chi, int& terms) {
    DoubleDouble sum = 0.0;
    DoubleDouble t = 1.0;
    for (int k = 1; k < 1000; ++k) {
        t = t * (-chi) / static_cast<double>(k);
        const DoubleDouble term = t / static_cast<double>(k);
        sum += term;
        if (internal::mag(term) < internal::kDDEps * (internal::mag(sum) + 1.0)) {
            terms = k;
            break;
        }
    }
    const DoubleDouble log_chi = detail::from_long_double(std::log(static_cast<long double>(chi)));
    return (-(detail::dd_const::euler_gamma + log_chi) - sum).to_double();
}

void validate(double a, double chi) {
    if (!std::isfinite(a) || !std::isfinite(chi)) {
        throw DomainError("upper_inc_gamma: non-finite input");
    }
    if (a < 0.0) throw DomainError("upper_inc_gamma: a must be >= 0");
    if (chi <= 0.0) throw DomainError("upper_inc_gamma: chi must be > 0");
    if (a > kMaxA || chi > kMaxChi) {
        throw DomainError("upper_inc_gamma: requires a <= 300 and chi <= 700");
    }
}

}  // namespace

SpecFunResult upper_inc_gamma_scaled(double a, double chi) {
    validate(a, chi);
    SpecFunResult r;
    int terms = 0;
    if (a >= 1.0 && is_integer(a)) {
        r.value = scaled_integer(static_cast<int>(a), chi, terms);
        r.abs_error_estimate = 2.0 * internal::kEps * r.value;
    } else if (chi > a + 1.0) {
        r.value = scaled_continued_fraction(a, chi, terms);
        r.abs_error_estimate = 8.0 * internal::kEps * r.value;
    } else if (a == 0.0) {
        r.value = std::exp(chi) * exp_integral_e1_series(chi, terms);
        r.abs_error_estimate = 4.0 * internal::kEps * r.value;
    } else {
        // Gamma(a) e^chi chi^{-a} - lower part; here Q(a, chi) is not small.
        const double log_full = std::lgamma(a) + chi - a * std::log(chi);
        const double full = std::exp(log_full);
        r.value = full - scaled_lower_series(a, chi, terms);
        r.abs_error_estimate = internal::kEps * full * (4.0 + std::fabs(log_full));
    }
    r.terms_used = terms;
    return r;
}

SpecFunResult upper_inc_gamma(double a, double chi) {
    validate(a, chi);
    SpecFunResult r;
    if (a >= 1.0 && is_integer(a) && a * std::log(chi) < 650.0) {
        // e^{-chi} sum_{k<n} (n-1)!/k! chi^k, built down from chi^{n-1}.
        const int n = static_cast<int>(a);
        DoubleDouble sum = 0.0;
        double t = std::pow(chi, n - 1);
        for (int k = n - 1; k >= 0; --k) {
            sum += t;
            t *= static_cast<double>(k) / chi;
        }
        r.value = std::exp(-chi) * sum.to_double();
        r.abs_error_estimate = 2.0 * internal::kEps * r.value;
        r.terms_used = n;
        return r;
    }
    const SpecFunResult scaled = upper_inc_gamma_scaled(a, chi);
    const double log_prefactor = a * std::log(chi) - chi;
    const double prefactor = std::exp(log_prefactor);
    if (!std::isfinite(prefactor) || !std::isfinite(scaled.value * prefactor)) {
        throw DomainError("upper_inc_gamma: value overflows double; use upper_inc_gamma_scaled");
    }
    r.value = scaled.value * prefactor;
    r.abs_error_estimate = prefactor * scaled.abs_error_estimate
                           + std::fabs(r.value) * internal::kEps * (1.0 + std::fabs(log_prefactor));
    r.terms_used = scaled.terms_used;
    return r;
}

}  // namespace kelvin::specfun
