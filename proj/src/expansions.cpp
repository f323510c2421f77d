#include "kelvin/expansions.hpp"

#include "kelvin/bounds.hpp"
#include "kelvin/detail/double_double.hpp"
#include "kelvin/errors.hpp"
#include "kelvin/oracle.hpp"
#include "kelvin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kelvin {

using detail::DoubleDouble;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kBesshoCancellationLimit = 1e12;
constexpr double kRecurrenceLossLimit = 1e6;
constexpr int kSmallRun = 3;

// Three-consecutive-small-terms stopping rule.
struct SmallRun {
    int count = 0;
    bool update(double term, double sum, double tol) {
        count = std::fabs(term) < tol * std::fabs(sum) ? count + 1 : 0;
        return count >= kSmallRun;
    }
};

struct SumOutcome {
    double value = 0.0;
    int terms = 0;
};

SumOutcome struve_double_sum_impl(const EvalPoint& pt, const TruncationPolicy& policy) {
    const double xc = pt.x * pt.c;
    const double half_xs = 0.5 * pt.x * pt.s;
    const double q = half_xs * half_xs;
    const double tol = policy.series_rel_tol;

    DoubleDouble outer = 0.0;
    SmallRun outer_run;
    double pre = 1.0;   // rho^r / r!
    double poch = 1.0;  // (1/2)_r
    int terms = 0;
    for (int r = 0; r < policy.max_terms; ++r) {
        if (r > 0) {
            pre *= pt.rho / r;
            poch *= r - 0.5;
        }
        DoubleDouble inner = 0.0;
        SmallRun inner_run;
        double coef = poch;  // (-1)^m (m+1/2)_r q^m / m!
        bool converged = false;
        for (int m = 0; m < policy.max_terms; ++m) {
            if (m > 0) {
                coef *= -q * (m - 0.5 + r) / ((m - 0.5) * m);
            }
            const double term = coef * specfun::struve_h_scaled(m + r, xc).value;
            inner += term;
            ++terms;
            if (q == 0.0 || inner_run.update(term, inner.to_double(), tol)) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw AccuracyNotReached("struve_double_sum: inner sum hit max_terms",
                                     outer.to_double(), std::fabs(inner.to_double()));
        }
        const double term = pre * inner.to_double();
        outer += term;
        if (outer_run.update(term, outer.to_double(), tol)) {
            return {outer.to_double(), terms};
        }
    }
    throw AccuracyNotReached("struve_double_sum: outer sum hit max_terms", outer.to_double(),
                             0.0);
}

// One step of the alpha = 0 coefficient recurrence given C_0 .. C_{m-1}.
std::pair<double, double> recurrence_step(int m, double x, double k_m,
                                          const std::vector<double>& c) {
    DoubleDouble dfact = 1.0;  // (2m - 1)!! = 2^m (1/2)_m
    for (int j = 1; j <= m; ++j) dfact = dfact * static_cast<double>(2 * j - 1);
    const double x2 = x * x;
    DoubleDouble acc = dfact * k_m;
    double magnitude = std::fabs(acc.to_double());
    double binom = 1.0;  // binom(m, r)
    for (int r = 0; r < m; ++r) {
        if (r > 0) binom = binom * (m - r + 1) / r;
        const DoubleDouble t = DoubleDouble(binom) * std::pow(x2, m - r) * c[static_cast<std::size_t>(r)];
        acc = acc - t;
        magnitude += std::fabs(t.to_double());
    }
    const double value = acc.to_double();
    const double loss = value != 0.0 ? magnitude / std::fabs(value) : HUGE_VAL;
    return {value, loss};
}

void check_table_args(int n, double x, const char* name) {
    if (n < 1 || n > kMaxCoefficients) {
        throw DomainError(std::string(name) + ": n must lie in [1, 30]");
    }
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(name) + ": x must be > 0");
}

double ursell_saddle(const EvalPoint& pt) {
    const double a = pt.abs_alpha();
    return std::sqrt(kPi / pt.M) * std::exp(-(pt.M - 0.5 * pt.rho) * std::cos(a))
           * std::sin((pt.M + 0.5 * pt.rho) * std::sin(a) + 0.5 * a);
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::bessho: return "bessho";
        case Method::ursell: return "ursell";
        case Method::paris: return "paris";
    }
    return "unknown";
}

const char* provenance_name(Provenance p) {
    return p == Provenance::recurrence ? "recurrence" : "quadrature";
}

MethodResult bessho_F(const EvalPoint& pt, const TruncationPolicy& policy) {
    const int mmax = policy.max_terms;
    const auto k = specfun::bessel_k_sequence(mmax, 0.5 * pt.rho);
    const auto j = specfun::bessel_j_sequence(2 * mmax, pt.x);
    const double a = pt.abs_alpha();

    DoubleDouble sum = (k[0] * j[0]).value();
    double max_partial = std::fabs(sum.hi);
    double abs_terms = std::fabs(sum.hi);
    double last = std::fabs(sum.hi);
    SmallRun run;
    for (int m = 1; m <= mmax; ++m) {
        const double sign = m % 2 == 0 ? 2.0 : -2.0;
        const double term = sign * std::cos(m * a)
                            * (k[static_cast<std::size_t>(m)] * j[static_cast<std::size_t>(2 * m)]).value();
        sum += term;
        const double partial = sum.to_double();
        max_partial = std::max(max_partial, std::fabs(partial));
        abs_terms += std::fabs(term);
        last = std::fabs(term);
        if (run.update(term, partial, policy.series_rel_tol)) {
            const double value = sum.to_double();
            if (max_partial > kBesshoCancellationLimit * std::fabs(value)) {
                throw AccuracyNotReached("bessho_F: cancellation exceeds 1e12", value,
                                         kEps * max_partial);
            }
            MethodResult r;
            r.value = value;
            r.method = Method::bessho;
            r.terms_used = m + 1;
            r.internal_error_estimate = 10.0 * last + kEps * abs_terms;
            return r;
        }
    }
    throw AccuracyNotReached("bessho_F: max_terms reached before convergence", sum.to_double(),
                             10.0 * last + kEps * abs_terms);
}

MethodResult ursell_F(const EvalPoint& pt) {
    if (!(pt.M > 1.0)) throw DomainError("ursell_F: requires M > 1");
    const SpecFunConfig cfg;
    if (pt.M > cfg.order_cap) {
        throw OrderOverflow("ursell_F: floor(M) exceeds the order cap");
    }
    const int mmax = static_cast<int>(std::floor(pt.M));
    const auto in = specfun::bessel_i_sequence(mmax, 0.5 * pt.rho);
    const auto yn = specfun::bessel_y_sequence(2 * mmax, pt.x);
    const double a = pt.abs_alpha();

    DoubleDouble sum = (in[0] * yn[0]).value();
    double last = std::fabs(sum.hi);
    for (int m = 1; m <= mmax; ++m) {
        const double term = 2.0 * std::cos(m * a)
                            * (in[static_cast<std::size_t>(m)] * yn[static_cast<std::size_t>(2 * m)]).value();
        sum += term;
        last = std::fabs(term);
    }
    MethodResult r;
    r.method = Method::ursell;
    r.saddle_term = ursell_saddle(pt);
    r.value = -kPi * sum.to_double() + r.saddle_term;
    r.terms_used = mmax + 1;
    r.internal_error_estimate = std::exp(-pt.M) + kPi * last;
    return r;
}

double struve_sum_alpha0(const EvalPoint& pt, const TruncationPolicy& policy) {
    if (pt.alpha != 0.0) throw DomainError("struve_sum_alpha0: requires alpha = 0");
    DoubleDouble sum = 0.0;
    SmallRun run;
    double pre = 1.0;   // rho^r / r!
    double poch = 1.0;  // (1/2)_r
    for (int r = 0; r < policy.max_terms; ++r) {
        if (r > 0) {
            pre *= pt.rho / r;
            poch *= r - 0.5;
        }
        const double term = pre * (poch * specfun::struve_h_scaled(r, pt.x).value);
        sum += term;
        if (run.update(term, sum.to_double(), policy.series_rel_tol)) return sum.to_double();
    }
    throw AccuracyNotReached("struve_sum_alpha0: max_terms reached", sum.to_double(), 0.0);
}

double struve_double_sum(const EvalPoint& pt, const TruncationPolicy& policy) {
    return struve_double_sum_impl(pt, policy).value;
}

CoefficientTable ck_recurrence(int n, double x) {
    check_table_args(n, x, "ck_recurrence");
    CoefficientTable t;
    t.alpha = 0.0;
    t.x = x;
    for (int m = 0; m < n; ++m) {
        const double k_m = specfun::struve_k_scaled(m, x).value;
        const auto [value, loss] = recurrence_step(m, x, k_m, t.values);
        t.values.push_back(value);
        t.provenance.push_back(Provenance::recurrence);
        t.cancellation_flags.push_back(loss > kRecurrenceLossLimit);
        t.loss.push_back(loss);
    }
    return t;
}

std::vector<std::int64_t> ck_symbolic_coefficients(int m) {
    if (m < 0 || m > 20) throw DomainError("ck_symbolic_coefficients: m must lie in [0, 20]");
    // a[r][j]: coefficient of x^{2j} K_{r-j} in C_r.
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::vector<std::int64_t>> binom(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        auto& row = binom[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            row[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
                                               + binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    for (int r = 0; r <= m; ++r) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(r) + 1, 0);
        std::int64_t dfact = 1;
        for (int j = 1; j <= r; ++j) dfact *= 2 * j - 1;
        row[0] = dfact;
        for (int q = 0; q < r; ++q) {
            const std::int64_t b = binom[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)];
            const auto& prev = a[static_cast<std::size_t>(q)];
            for (int j = 0; j <= q; ++j) {
                row[static_cast<std::size_t>(j + r - q)] -= b * prev[static_cast<std::size_t>(j)];
            }
        }
        a.push_back(std::move(row));
    }
    return a.back();
}

CoefficientTable ck_table(int n, double x, double alpha) {
    check_table_args(n, x, "ck_table");
    if (!(alpha >= 0.0 && alpha <= 0.5 * kPi * (1.0 + 1e-15))) {
        throw DomainError("ck_table: alpha must lie in [0, pi/2]");
    }
    if (alpha != 0.0) {
        CoefficientTable t;
        t.alpha = alpha;
        t.x = x;
        for (int k = 0; k < n; ++k) {
            t.values.push_back(oracle_Ck(k, x, alpha).value);
            t.provenance.push_back(Provenance::quadrature);
            t.cancellation_flags.push_back(false);
            t.loss.push_back(1.0);
        }
        return t;
    }
    CoefficientTable t;
    t.x = x;
    for (int m = 0; m < n; ++m) {
        const double k_m = specfun::struve_k_scaled(m, x).value;
        const auto [value, loss] = recurrence_step(m, x, k_m, t.values);
        const bool flagged = loss > kRecurrenceLossLimit;
        t.values.push_back(flagged ? oracle_Ck(m, x, 0.0).value : value);
        t.provenance.push_back(flagged ? Provenance::quadrature : Provenance::recurrence);
        t.cancellation_flags.push_back(flagged);
        t.loss.push_back(loss);
    }
    return t;
}

double asymptotic_sum(const EvalPoint& pt, const CoefficientTable& ck) {
    if (ck.x != pt.x || ck.alpha != pt.abs_alpha()) {
        throw DomainError("asymptotic_sum: coefficient table built for a different point");
    }
    DoubleDouble sum = 0.0;
    double factor = 1.0;  // M^{-k} / (4^k k!)
    for (std::size_t k = 0; k < ck.values.size(); ++k) {
        if (k > 0) factor /= 4.0 * pt.M * static_cast<double>(k);
        sum += factor * ck.values[k];
    }
    return sum.to_double();
}

double saddle_integral_alpha0(const EvalPoint& pt) {
    const double q = 1.0 + pt.p * pt.p;
    return std::exp(-pt.M) / (pt.M * q * std::sqrt(q));
}

double saddle_term(const EvalPoint& pt, double alpha_switch) {
    if (!(pt.M > 1.0)) throw DomainError("saddle_term: requires M > 1");
    if (pt.abs_alpha() < alpha_switch) {
        return std::exp(0.5 * pt.rho) * saddle_integral_alpha0(pt);
    }
    return ursell_saddle(pt);
}

int resolve_n(const EvalPoint& pt, const TruncationPolicy& policy) {
    const int cap = std::min(kMaxCoefficients, policy.max_terms);
    if (policy.n) {
        if (*policy.n < 1 || *policy.n > cap) {
            throw DomainError("paris_F: n must lie in [1, " + std::to_string(cap) + "]");
        }
        return *policy.n;
    }
    const double mc2 = pt.M * pt.c * pt.c;
    if (!(mc2 > 1.0)) {
        throw RegimeError("paris_F: M c^2 <= 1 leaves no asymptotic terms; use bessho_F");
    }
    return std::min(cap, std::max(1, static_cast<int>(std::floor(mc2)) - 1));
}

MethodResult paris_F(const EvalPoint& pt, const TruncationPolicy& policy) {
    const int n = resolve_n(pt, policy);
    MethodResult r;
    r.method = Method::paris;
    r.n_used = n;

    const SumOutcome s1 = struve_double_sum_impl(pt, policy);
    const CoefficientTable ck = ck_table(n, pt.x, pt.abs_alpha());
    r.components.struve_sum = s1.value;
    r.components.asymptotic_sum = asymptotic_sum(pt, ck);
    r.components.saddle = saddle_term(pt, policy.alpha_switch);
    r.saddle_term = r.components.saddle;
    r.value = -kPi * std::exp(-0.5 * pt.rho) * r.components.struve_sum
              + kPi * std::exp(0.5 * pt.rho) * r.components.asymptotic_sum + r.components.saddle;
    r.terms_used = s1.terms + n;
    r.internal_error_estimate =
        2.0 * std::exp(0.5 * pt.rho) * (remainder_bound(n, pt.M) + tail_bound(n, pt).value)
        + std::fabs(r.components.saddle) / pt.M;
    return r;
}

double curly_F_residual(const EvalPoint& pt, int n) {
    TruncationPolicy policy;
    policy.n = n;
    const double f = oracle_F(pt, 1e-12).value;
    const double s1 = struve_double_sum(pt, policy);
    const CoefficientTable ck = ck_table(resolve_n(pt, policy), pt.x, pt.abs_alpha());
    return f + kPi * std::exp(-0.5 * pt.rho) * s1
           - kPi * std::exp(0.5 * pt.rho) * asymptotic_sum(pt, ck);
}

}  // namespace kelvin
