#include "kelvin/specfun.hpp"

#include "internal.hpp"
#include "kelvin/errors.hpp"

#include <algorithm>
#include <cmath>

namespace kelvin::specfun {

using detail::DoubleDouble;
using detail::two_sum;

namespace {

constexpr double kMaxAbsZ = 50.0;
// Below this the direct series loses at most e^{2|z|} ~ 2e4 to cancellation,
// which double-double absorbs.
constexpr double kDirectSeriesNegLimit = -5.0;

internal::SeriesOutcome kummer_series(DoubleDouble a, DoubleDouble b, double z) {
    internal::SeriesOutcome out;
    DoubleDouble t = 1.0;
    out.sum = t;
    out.max_term = 1.0;
    out.terms = 1;
    for (int k = 0; k < 5000; ++k) {
        const DoubleDouble ak = a + static_cast<double>(k);
        const DoubleDouble bk = b + static_cast<double>(k);
        const double kk = static_cast<double>(k + 1);
        const DoubleDouble ratio = ak * z / (bk * kk);
        t = t * ratio;
        if (t.hi == 0.0) {  // a is a non-positive integer: polynomial
            out.truncation = 0.0;
            return out;
        }
        const double r_abs = internal::mag(ratio);
        if (r_abs < 1.0 && internal::mag(t) <= internal::kDDEps * internal::mag(out.sum)) {
            // Ratios decrease from here on, so the tail is bounded by a geometric series.
            out.truncation = internal::mag(t) / (1.0 - r_abs);
            return out;
        }
        out.sum += t;
        out.max_term = std::max(out.max_term, internal::mag(t));
        ++out.terms;
    }
    throw AccuracyNotReached("kummer_1f1: series did not converge", out.sum.to_double(),
                             internal::mag(t));
}

}  // namespace

SpecFunResult kummer_1f1(double a, double b, double z) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
        throw DomainError("kummer_1f1: non-finite input");
    }
    if (b <= 0.0 && b == std::floor(b)) {
        throw DomainError("kummer_1f1: b must not be a non-positive integer");
    }
    if (std::fabs(z) > kMaxAbsZ) {
        throw DomainError("kummer_1f1: |z| > 50 is outside the supported range");
    }

    SpecFunResult r;
    if (z >= kDirectSeriesNegLimit) {
        const auto s = kummer_series(a, b, z);
        r.value = s.sum.to_double();
        r.abs_error_estimate = s.truncation + internal::kDDEps * s.max_term * s.terms
                               + 0.5 * internal::kEps * std::fabs(r.value);
        r.terms_used = s.terms;
        return r;
    }

    // Kummer's transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z).
    const DoubleDouble b_minus_a = two_sum(b, -a);
    const auto s = kummer_series(b_minus_a, b, -z);
    const double scale = std::exp(z);
    r.value = scale * s.sum.to_double();
    r.abs_error_estimate = scale * (s.truncation + internal::kDDEps * s.max_term * s.terms)
                           + 2.0 * internal::kEps * std::fabs(r.value);
    r.terms_used = s.terms;
    return r;
}

}  // namespace kelvin::specfun
