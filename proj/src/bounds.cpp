#include "kelvin/bounds.hpp"

#include "kelvin/errors.hpp"
#include "kelvin/quadrature.hpp"
#include "kelvin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kelvin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxChi = 700.0;

void check_n(int n, const char* name) {
    if (n < 1 || n > 80) throw DomainError(std::string(name) + ": n must lie in [1, 80]");
}

void check_u0(const EvalPoint& pt, const char* name) {
    if (!(pt.u0 > 0.0)) throw DomainError(std::string(name) + ": requires u0 > 0");
}

// ln Gamma(a, chi). Beyond the kernel's chi range the bound 2 chi^a e^{-chi}
// (a <= chi) replaces the exact value, which keeps the result an upper bound.
double log_upper_gamma(double a, double chi) {
    if (chi > kMaxChi) return std::log(2.0) + a * std::log(chi) - chi;
    const double scaled = specfun::upper_inc_gamma_scaled(a, chi).value;
    return std::log(scaled) + a * std::log(chi) - chi;
}

// e^{-x c xi} cos(s x sqrt(1 + xi^2)) / sqrt(1 + xi^2)
struct Kernel {
    double xc;
    double sx;
    double operator()(double xi) const {
        const double w = std::sqrt(1.0 + xi * xi);
        return std::exp(-xc * xi) * std::cos(sx * w) / w;
    }
};

// sum_{k>=n} y^k / k!, summed directly so nothing cancels.
double exp_tail(double y, int n) {
    if (y == 0.0) return 0.0;
    double t = 1.0;
    for (int k = 1; k <= n; ++k) t *= y / k;
    double sum = 0.0;
    for (int k = n + 1; k < n + 2000; ++k) {
        sum += t;
        t *= y / k;
        if (t < 1e-18 * sum) break;
    }
    return sum + t;
}

// sum_{k<n} y^k / k!
double exp_head(double y, int n) {
    double t = 1.0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += t;
        t *= y / (k + 1);
    }
    return sum;
}

}  // namespace

const char* tail_regime_name(TailRegime r) {
    switch (r) {
        case TailRegime::exponential: return "exponential";
        case TailRegime::polynomial: return "polynomial";
        case TailRegime::incomplete_gamma: return "incomplete_gamma";
    }
    return "unknown";
}

double remainder_bound(int n, double M) {
    check_n(n, "remainder_bound");
    if (!(M > 0.0)) throw DomainError("remainder_bound: M must be > 0");
    return std::exp(-n * std::log(M) + std::lgamma(2.0 * n) - std::lgamma(n + 1.0));
}

double tail_bound_exponential(const EvalPoint& pt) {
    check_u0(pt, "tail_bound_exponential");
    return 2.0 * std::exp(-pt.M * pt.u0 * pt.c);
}

double tail_bound_polynomial(int n, const EvalPoint& pt) {
    check_n(n, "tail_bound_polynomial");
    check_u0(pt, "tail_bound_polynomial");
    const double log_q = std::log(pt.M * pt.u0 * pt.u0);
    // log of sum_{k<n} q^k, accumulated relative to the largest term.
    const double top = std::max(0.0, (n - 1) * log_q);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += std::exp(k * log_q - top);
    return 2.0 * std::exp(-2.0 * pt.M * pt.u0 * pt.c + top + std::log(sum));
}

double tail_bound_incomplete_gamma(int n, const EvalPoint& pt) {
    check_n(n, "tail_bound_incomplete_gamma");
    check_u0(pt, "tail_bound_incomplete_gamma");
    const double chi = 2.0 * pt.M * pt.u0 * pt.c;
    const double log_mc2 = std::log(pt.M * pt.c * pt.c);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double log_term = -k * (log_mc2 + std::log(4.0)) - std::lgamma(k + 1.0)
                                + log_upper_gamma(2.0 * k, chi);
        sum += std::exp(log_term);
    }
    return sum;
}

TailBound tail_bound(int n, const EvalPoint& pt) {
    const double mu0c = pt.M * pt.u0 * pt.c;
    std::optional<TailBound> best;
    if (n - 1 <= mu0c) best = TailBound{tail_bound_polynomial(n, pt), TailRegime::polynomial};
    if (n < mu0c) {
        const double v = tail_bound_exponential(pt);
        if (!best || v < best->value) best = TailBound{v, TailRegime::exponential};
    }
    if (best) return *best;
    return {tail_bound_incomplete_gamma(n, pt), TailRegime::incomplete_gamma};
}

double measure_remainder(const EvalPoint& pt, int n) {
    check_n(n, "measure_remainder");
    const Kernel g{pt.x * pt.c, pt.s * pt.x};
    const double rho = pt.rho;
    auto f = [=](double xi) { return exp_tail(rho * xi * xi, n) * g(xi); };
    std::vector<double> pts{0.0};
    const double step = std::max(0.5, 1.0 / g.xc);
    while (pts.back() + step < pt.xi0) pts.push_back(pts.back() + step);
    pts.push_back(pt.xi0);
    QuadOptions o;
    o.abs_tol = 1e-30;
    o.rel_tol = 1e-12;
    return integrate_adaptive(f, pts, o).value;
}

double measure_tail(const EvalPoint& pt, int n) {
    check_n(n, "measure_tail");
    check_u0(pt, "measure_tail");
    const Kernel g{pt.x * pt.c, pt.s * pt.x};
    const double rho = pt.rho;
    auto f = [=](double xi) { return exp_head(rho * xi * xi, n) * g(xi); };
    // |int_X^inf| <= sum_{k<n} (rho^k / k!) (xc)^{-2k} Gamma(2k, xc X).
    auto bound = [=](double X) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            sum += std::exp(k * (std::log(rho) - 2.0 * std::log(g.xc)) - std::lgamma(k + 1.0)
                            + log_upper_gamma(2.0 * k, g.xc * X));
        }
        return sum;
    };
    QuadOptions o;
    o.abs_tol = 1e-30;
    o.rel_tol = 1e-12;
    return integrate_to_infinity(f, pt.xi0, bound, 10.0 / g.xc, o).value;
}

BoundReport verify_remainder(const EvalPoint& pt, int n) {
    BoundReport r;
    r.point = pt;
    r.n = n;
    r.rn_bound = remainder_bound(n, pt.M);
    const TailBound t = tail_bound(n, pt);
    r.tail_bound = t.value;
    r.tail_regime = t.regime;
    r.inc_gamma_margin = kNaN;
    r.measured_rn = measure_remainder(pt, n);
    r.measured_tail = measure_tail(pt, n);
    if (!(std::fabs(*r.measured_rn) < r.rn_bound)) {
        throw BoundViolated("verify_remainder: |R_n| = " + std::to_string(std::fabs(*r.measured_rn))
                            + " is not below its bound");
    }
    if (!(std::fabs(*r.measured_tail) < r.tail_bound)) {
        throw BoundViolated("verify_remainder: |T| = " + std::to_string(std::fabs(*r.measured_tail))
                            + " is not below its bound");
    }
    return r;
}

std::vector<std::pair<double, double>> inc_gamma_grid(int n_chi, int n_a) {
    if (n_chi < 2 || n_a < 2) throw DomainError("inc_gamma_grid: need at least 2 points per axis");
    std::vector<std::pair<double, double>> grid;
    grid.reserve(static_cast<std::size_t>(n_chi) * static_cast<std::size_t>(n_a));
    for (int i = 0; i < n_chi; ++i) {
        const double chi = 1.0 + 49.0 * i / (n_chi - 1);
        for (int j = 0; j < n_a; ++j) {
            grid.emplace_back(chi * j / (n_a - 1), chi);
        }
    }
    return grid;
}

BoundReport verify_inc_gamma_bound(std::span<const std::pair<double, double>> grid) {
    if (grid.empty()) throw DomainError("verify_inc_gamma_bound: empty grid");
    double worst = 0.0;
    for (const auto& [a, chi] : grid) {
        if (!(chi >= 1.0) || !(a >= 0.0) || !(a <= chi)) {
            throw DomainError("verify_inc_gamma_bound: grid point outside 0 <= a <= chi, chi >= 1");
        }
        // Gamma(a, chi) / (2 chi^a e^{-chi}) is half the scaled function.
        worst = std::max(worst, 0.5 * specfun::upper_inc_gamma_scaled(a, chi).value);
    }
    BoundReport r;
    r.rn_bound = kNaN;
    r.tail_bound = kNaN;
    r.inc_gamma_margin = worst;
    if (!(worst <= 1.0)) {
        throw BoundViolated("verify_inc_gamma_bound: Gamma(a, chi) exceeds 2 chi^a e^{-chi}");
    }
    return r;
}

}  // namespace kelvin
