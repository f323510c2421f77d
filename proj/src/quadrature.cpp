#include "kelvin/quadrature.hpp"

#include "kelvin/detail/double_double.hpp"
#include "kelvin/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace kelvin {

namespace {

// 21-point Kronrod abscissae on [-1, 1] (positive half, descending) and the
// weights of the embedded 10-point Gauss rule at the odd-indexed nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452014, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kRuleSize = 21;

struct Segment {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
    bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(double v) {
    if (!std::isfinite(v)) throw DomainError("integrate_adaptive: integrand is not finite");
    return v;
}

Segment gauss_kronrod(const Integrand& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = checked(g(center));
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    double abs_sum = std::fabs(fc) * kWgk[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double f1 = checked(g(center - dx));
        const double f2 = checked(g(center + dx));
        kronrod += kWgk[static_cast<std::size_t>(j)] * (f1 + f2);
        abs_sum += kWgk[static_cast<std::size_t>(j)] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * (f1 + f2);
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = kronrod * half;
    const double abs_half = std::fabs(half);
    s.error = std::max(std::fabs(kronrod - gauss) * abs_half, 2.0 * kEps * abs_sum * abs_half);
    return s;
}

struct Totals {
    double value = 0.0;
    double error = 0.0;
};

Totals sum_segments(const std::vector<Segment>& heap_storage, const std::vector<Segment>& frozen) {
    detail::DoubleDouble value = 0.0;
    double error = 0.0;
    double abs_value = 0.0;
    for (const auto* list : {&heap_storage, &frozen}) {
        for (const auto& s : *list) {
            value += s.value;
            error += s.error;
            abs_value += std::fabs(s.value);
        }
    }
    return {value.to_double(), error + kEps * abs_value};
}

// Exposes the underlying container of a priority_queue for exact re-summation.
struct SegmentQueue : std::priority_queue<Segment> {
    const std::vector<Segment>& items() const { return c; }
};

QuadResult adaptive_core(const Integrand& g, std::span<const double> points,
                         double abs_tol, double rel_tol, long max_evaluations) {
    SegmentQueue queue;
    std::vector<Segment> frozen;
    long evaluations = 0;
    double running_value = 0.0;
    double running_error = 0.0;

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1])) {
            throw DomainError("integrate_adaptive: breakpoints must be strictly increasing");
        }
        const Segment s = gauss_kronrod(g, points[i], points[i + 1]);
        evaluations += kRuleSize;
        running_value += s.value;
        running_error += s.error;
        queue.push(s);
    }

    auto tolerance = [&](double value) { return std::max(abs_tol, rel_tol * std::fabs(value)); };

    while (true) {
        if (running_error <= tolerance(running_value)) {
            const Totals exact = sum_segments(queue.items(), frozen);
            running_value = exact.value;
            running_error = exact.error;
            if (exact.error <= tolerance(exact.value)) {
                return {exact.value, exact.error, evaluations,
                        std::numeric_limits<double>::quiet_NaN()};
            }
        }
        if (queue.empty() || evaluations + 2 * kRuleSize > max_evaluations) {
            const Totals exact = sum_segments(queue.items(), frozen);
            throw AccuracyNotReached("integrate_adaptive: tolerance not reached within budget",
                                     exact.value, exact.error);
        }
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)
            || (worst.b - worst.a) < 16.0 * kEps * std::max(std::fabs(worst.a), std::fabs(worst.b))) {
            frozen.push_back(worst);
            continue;
        }
        const Segment left = gauss_kronrod(g, worst.a, mid);
        const Segment right = gauss_kronrod(g, mid, worst.b);
        evaluations += 2 * kRuleSize;
        running_value += left.value + right.value - worst.value;
        running_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
}

void check_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_adaptive: endpoints must be finite");
    }
    if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadOptions& opts) {
    check_interval(a, b);
    const double len = b - a;
    constexpr double half_pi = 0.5 * std::numbers::pi;

    switch (opts.weight) {
        case EndpointWeight::none: {
            const std::array<double, 2> pts{a, b};
            return adaptive_core(f, pts, opts.abs_tol, opts.rel_tol, opts.max_evaluations);
        }
        case EndpointWeight::left: {
            // t = a + len sin^2(phi): (t-a)^{-1/2} dt = 2 sqrt(len) cos(phi) dphi.
            const double root = std::sqrt(len);
            auto g = [&](double phi) {
                const double s = std::sin(phi);
                return f(a + len * s * s) * 2.0 * root * std::cos(phi);
            };
            const std::array<double, 2> pts{0.0, half_pi};
            return adaptive_core(g, pts, opts.abs_tol, opts.rel_tol, opts.max_evaluations);
        }
        case EndpointWeight::right: {
            const double root = std::sqrt(len);
            auto g = [&](double phi) {
                const double s = std::sin(phi);
                return f(b - len * s * s) * 2.0 * root * std::cos(phi);
            };
            const std::array<double, 2> pts{0.0, half_pi};
            return adaptive_core(g, pts, opts.abs_tol, opts.rel_tol, opts.max_evaluations);
        }
        case EndpointWeight::both: {
            // t = mid - h cos(theta): (t-a)^{-1/2} (b-t)^{-1/2} dt = dtheta.
            const double mid = 0.5 * (a + b);
            const double h = 0.5 * len;
            auto g = [&](double theta) { return f(mid - h * std::cos(theta)); };
            const std::array<double, 2> pts{0.0, std::numbers::pi};
            return adaptive_core(g, pts, opts.abs_tol, opts.rel_tol, opts.max_evaluations);
        }
    }
    throw DomainError("integrate_adaptive: unknown endpoint weight");
}

QuadResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadOptions& opts) {
    if (breakpoints.size() < 2) {
        throw DomainError("integrate_adaptive: need at least two breakpoints");
    }
    if (opts.weight != EndpointWeight::none) {
        throw DomainError("integrate_adaptive: endpoint weights are not supported with breakpoints");
    }
    check_interval(breakpoints.front(), breakpoints.back());
    return adaptive_core(f, breakpoints, opts.abs_tol, opts.rel_tol, opts.max_evaluations);
}

QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 const std::function<double(double)>& tail_bound, double step,
                                 const QuadOptions& opts) {
    if (!(step > 0.0)) throw DomainError("integrate_to_infinity: step must be positive");
    double cut = a + step;
    double tail = tail_bound(cut);
    for (int i = 0; i < 64 && !(tail <= 0.01 * opts.abs_tol); ++i) {
        cut = a + 2.0 * (cut - a);
        tail = tail_bound(cut);
    }
    if (!(tail <= 0.01 * opts.abs_tol)) {
        throw AccuracyNotReached("integrate_to_infinity: tail bound never fell below tolerance",
                                 0.0, tail);
    }
    QuadResult r = integrate_adaptive(f, a, cut, opts);
    r.abs_error_estimate += tail;
    r.truncation_point = cut;
    return r;
}

}  // namespace kelvin
