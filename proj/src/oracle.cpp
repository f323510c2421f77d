#include "kelvin/oracle.hpp"

#include "kelvin/errors.hpp"
#include "kelvin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace kelvin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Phase beyond which the direct u-range is abandoned for the oscillatory tail.
constexpr double kMaxDirectPhase = 1e4;
constexpr int kTailHalfCycles = 60;

QuadOptions tight() {
    QuadOptions o;
    o.abs_tol = 1e-15;
    o.rel_tol = 1e-14;
    return o;
}

// Limit of a sequence of partial sums by Wynn's epsilon algorithm. Returns
// the estimate and the difference between the last two even-column entries.
std::pair<double, double> wynn_epsilon(const std::vector<double>& sums) {
    const std::size_t n = sums.size();
    double best = sums.back();
    double err = n > 1 ? std::fabs(sums[n - 1] - sums[n - 2]) : HUGE_VAL;
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur = sums;
    for (int k = 1; cur.size() > 1; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (d == 0.0) return {best, err};
            next[i] = prev[i + 1] + 1.0 / d;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0 && cur.size() >= 2) {
            const double e = std::fabs(cur.back() - cur[cur.size() - 2]);
            if (e < err) {
                best = cur.back();
                err = e;
            }
        }
    }
    return {best, err};
}

// Direct route: F = 2 int_0^U exp(-a cosh 2u) cos(b sinh 2u) cos(x cosh u) du
// with the range split at every 4 pi of phase.
QuadResult oracle_F_direct(const EvalPoint& pt, double a, double b, double U, double tail,
                           double abs_tol) {
    const double x = pt.x;
    std::vector<double> pts{0.0};
    double u = 0.0;
    while (u < U) {
        const double dphase = 2.0 * b * std::cosh(2.0 * u) + x * std::sinh(u);
        const double du = dphase > 0.0 ? std::min(0.25, 2.0 * kTwoPi / dphase) : 0.25;
        u = std::min(U, u + du);
        pts.push_back(u);
    }
    auto f = [=](double v) {
        return 2.0 * std::exp(-a * std::cosh(2.0 * v)) * std::cos(b * std::sinh(2.0 * v))
               * std::cos(x * std::cosh(v));
    };
    QuadOptions o;
    o.abs_tol = 0.5 * abs_tol;
    o.rel_tol = 0.0;
    QuadResult r = integrate_adaptive(f, pts, o);
    r.abs_error_estimate += tail;
    r.truncation_point = U;
    return r;
}

// Near alpha = pi/2 the damping exp(-a cosh 2u) is too weak for a direct
// cut. With v = sinh 2u and C(v) = cosh u,
//   F = int_0^inf e^{-a sqrt(1+v^2)} cos(bv) cos(x C(v)) / sqrt(1+v^2) dv.
// [0, V1] is integrated directly; beyond V1 the two phases bv +- x C(v) are
// monotone, and each half of the product is summed over half-cycles with
// Wynn acceleration.
QuadResult oracle_F_oscillatory(const EvalPoint& pt, double a, double b, double abs_tol) {
    const double x = pt.x;
    auto chalf = [](double v) { return std::sqrt(0.5 * (1.0 + std::sqrt(1.0 + v * v))); };
    auto chalf_prime = [&](double v) {
        return v / (4.0 * chalf(v) * std::sqrt(1.0 + v * v));
    };
    auto damp = [=](double v) {
        const double w = std::sqrt(1.0 + v * v);
        return std::exp(-a * w) / w;
    };
    const double V1 = std::max(x * x / (2.0 * b * b), 10.0);

    std::vector<double> pts{0.0};
    double v = 0.0;
    while (v < V1) {
        const double dphase = b + x * chalf_prime(v);
        v = std::min(V1, v + std::min(2.0 * kTwoPi / dphase, std::max(0.5, 0.5 * v)));
        pts.push_back(v);
    }
    QuadOptions o;
    o.abs_tol = 0.25 * abs_tol;
    o.rel_tol = 0.0;
    auto head = [&](double t) {
        return damp(t) * std::cos(b * t) * std::cos(x * chalf(t));
    };
    QuadResult total = integrate_adaptive(head, pts, o);
    total.truncation_point = V1;

    for (const double sign : {1.0, -1.0}) {
        auto phase = [&](double t) { return b * t + sign * x * chalf(t); };
        auto phase_prime = [&](double t) { return b + sign * x * chalf_prime(t); };
        auto g = [&](double t) { return 0.5 * damp(t) * std::cos(phase(t)); };
        auto zero_after = [&](double target, double guess) {
            double t = guess;
            for (int i = 0; i < 50; ++i) {
                const double step = (phase(t) - target) / phase_prime(t);
                t -= step;
                if (std::fabs(step) <= 1e-15 * t) break;
            }
            return t;
        };
        double k = std::ceil(phase(V1) / kPi - 0.5);
        double left = V1;
        double right = zero_after((k + 0.5) * kPi, V1 + kPi / phase_prime(V1));
        std::vector<double> sums;
        double running = 0.0;
        double err = 0.0;
        long evals = 0;
        if (right > left) {
            const QuadResult first = integrate_adaptive(g, left, right, o);
            running += first.value;
            err += first.abs_error_estimate;
            evals += first.evaluations;
        }
        for (int j = 0; j < kTailHalfCycles; ++j) {
            left = right;
            k += 1.0;
            right = zero_after((k + 0.5) * kPi, left + kPi / phase_prime(left));
            const QuadResult piece = integrate_adaptive(g, left, right, o);
            running += piece.value;
            err += piece.abs_error_estimate;
            evals += piece.evaluations;
            sums.push_back(running);
        }
        const auto [limit, limit_err] = wynn_epsilon(sums);
        total.value += limit;
        total.abs_error_estimate += err + limit_err;
        total.evaluations += evals;
    }
    return total;
}

double gamma_tail(int a, double chi) {
    // Gamma(a, chi) for integer a >= 0, falling back to 2 chi^a e^{-chi}
    // (valid for a <= chi, chi >= 1) beyond the kernel's range.
    if (chi > 700.0) {
        return 2.0 * std::exp(a * std::log(chi) - chi);
    }
    return specfun::upper_inc_gamma(static_cast<double>(a), chi).value;
}

}  // namespace

QuadResult oracle_F(const EvalPoint& pt, double abs_tol) {
    if (!(abs_tol >= 1e-14)) throw DomainError("oracle_F: abs_tol must be >= 1e-14");
    const double a = 0.5 * pt.rho * std::cos(pt.abs_alpha());
    const double b = 0.5 * pt.rho * std::sin(pt.abs_alpha());

    QuadResult r;
    bool direct = false;
    double U = 0.0;
    double tail = 0.0;
    if (a > 0.0) {
        // |2 int_U^inf e^{-a cosh 2u} du| <= e^{-aV} / (a sqrt(V^2 - 1)), V = cosh 2U.
        double V = std::max(2.0, (std::log(1.0 / abs_tol) + 5.0) / a);
        auto bound = [&](double w) { return std::exp(-a * w) / (a * std::sqrt(w * w - 1.0)); };
        while (bound(V) > 0.1 * abs_tol) V *= 1.1;
        U = 0.5 * std::acosh(V);
        tail = bound(V);
        direct = b * std::sinh(2.0 * U) + pt.x * std::cosh(U) <= kMaxDirectPhase;
    }
    r = direct ? oracle_F_direct(pt, a, b, U, tail, abs_tol)
               : oracle_F_oscillatory(pt, a, b, abs_tol);
    if (!(r.abs_error_estimate <= abs_tol)) {
        throw AccuracyNotReached("oracle_F: tolerance not reached", r.value,
                                 r.abs_error_estimate);
    }
    return r;
}

QuadResult oracle_I1_alpha0(const EvalPoint& pt) {
    if (pt.alpha != 0.0) throw DomainError("oracle_I1_alpha0: requires alpha = 0");
    return oracle_I1_alpha(pt);
}

QuadResult oracle_I1_alpha(const EvalPoint& pt) {
    const double M = pt.M;
    const double p = pt.p;
    const double c = pt.c;
    const double s = pt.s;
    // Cofactor of the declared (p - t)^{-1/2} weight.
    auto f = [=](double t) {
        const double w = std::sqrt(std::max(0.0, (p - t) * (p + t)));
        return std::exp(-M * t * t) * std::sin(2.0 * M * c * t) * std::cos(2.0 * M * s * w)
               / std::sqrt(p + t);
    };
    QuadOptions o = tight();
    o.weight = EndpointWeight::right;
    return integrate_adaptive(f, 0.0, p, o);
}

QuadResult oracle_I2(const EvalPoint& pt) {
    const double rho = pt.rho;
    const double xc = pt.x * pt.c;
    const double sx = pt.s * pt.x;
    auto f = [=](double xi) {
        const double w = std::sqrt(1.0 + xi * xi);
        return std::exp(rho * xi * xi - xc * xi) * std::cos(sx * w) / w;
    };
    // Split at unit steps in the exponent so the adaptive rule sees the bump.
    std::vector<double> pts{0.0};
    const double step = std::max(0.5, 1.0 / xc);
    while (pts.back() + step < pt.xi0) pts.push_back(pts.back() + step);
    pts.push_back(pt.xi0);
    return integrate_adaptive(f, pts, tight());
}

QuadResult oracle_Ck(int k, double x, double alpha) {
    if (k < 0 || k > 30) throw DomainError("oracle_Ck: requires 0 <= k <= 30");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("oracle_Ck: x must be > 0");
    if (!(alpha >= 0.0 && alpha <= 0.5 * kPi * (1.0 + 1e-15))) {
        throw DomainError("oracle_Ck: alpha must lie in [0, pi/2]");
    }
    const double c = std::cos(0.5 * alpha);
    const double s = std::sin(0.5 * alpha);
    const double two_over_pi = 2.0 / kPi;
    const int n2 = 2 * k;

    // (2/pi) int_0^inf t^{2k} e^{-ct} / sqrt(x^2 + t^2) dt is at most
    // (2/pi) Gamma(2k) c^{-2k} for k >= 1; it sets the absolute scale.
    const double scale = k == 0 ? 1.0 : two_over_pi * std::exp(std::lgamma(n2) - n2 * std::log(c));
    QuadOptions o;
    o.abs_tol = 1e-14 * scale;
    o.rel_tol = 1e-13;

    auto t_tail = [=](double T) {
        if (k == 0) return two_over_pi * std::exp(-c * T) / (c * T);
        return two_over_pi * std::pow(c, -n2) * gamma_tail(n2, c * T);
    };
    const double t_step = (n2 + 1.0) / c + 5.0;

    auto t_form = [=](double t) {
        const double w = std::sqrt(x * x + t * t);
        const double power = n2 == 0 ? 1.0 : std::pow(t, n2);
        return two_over_pi * power * std::exp(-c * t) * std::cos(s * w) / w;
    };
    const QuadResult rt = integrate_to_infinity(t_form, 0.0, t_tail, t_step, o);

    const double x_pow = std::pow(x, n2);
    auto xi_form = [=](double xi) {
        const double w = std::sqrt(1.0 + xi * xi);
        const double power = n2 == 0 ? 1.0 : std::pow(xi, n2);
        return two_over_pi * x_pow * power * std::exp(-x * c * xi) * std::cos(s * x * w) / w;
    };
    auto xi_tail = [=](double X) { return t_tail(x * X); };
    const QuadResult rx = integrate_to_infinity(xi_form, 0.0, xi_tail, t_step / x, o);

    const double diff = std::fabs(rt.value - rx.value);
    const double allowed = 1e-10 * std::max(std::fabs(rt.value), std::fabs(rx.value))
                           + rt.abs_error_estimate + rx.abs_error_estimate;
    if (!(diff <= allowed)) {
        throw ConsistencyError("oracle_Ck: t-form and xi-form disagree");
    }
    QuadResult r = rt;
    r.abs_error_estimate = std::max(rt.abs_error_estimate, diff);
    r.evaluations += rx.evaluations;
    return r;
}

std::pair<double, double> oracle_moment_identity(int k, double mu, double M, double p) {
    if (k < 0 || k > 20) throw DomainError("oracle_moment_identity: requires 0 <= k <= 20");
    if (!(mu > 0.0) || !(M > 0.0) || !(p > 0.0)) {
        throw DomainError("oracle_moment_identity: mu, M, p must be > 0");
    }
    const int k2 = 2 * k + 1;
    // Weight (p - t)^{-1/2}; the cofactor (p - t)^{mu - 1/2} (p + t)^{mu - 1}
    // is smooth for half-integer mu.
    auto f = [=](double t) {
        return std::exp(-M * t * t) * std::pow(t, k2) * std::pow(p - t, mu - 0.5)
               * std::pow(p + t, mu - 1.0);
    };
    QuadOptions o = tight();
    o.abs_tol = 0.0;
    o.rel_tol = 1e-14;
    o.weight = EndpointWeight::right;
    const double lhs = integrate_adaptive(f, 0.0, p, o).value;

    const double log_pre = (2.0 * k + 2.0 * mu) * std::log(p) + std::lgamma(k + 1.0)
                           + std::lgamma(mu) - std::lgamma(k + mu + 1.0);
    const double hyp = specfun::kummer_1f1(k + 1.0, k + mu + 1.0, -M * p * p).value;
    const double rhs = 0.5 * std::exp(log_pre) * hyp;
    return {lhs, rhs};
}

}  // namespace kelvin
