#pragma once

// Minimal double-double arithmetic for the series kernels.
//
// A value is the unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving
// roughly 32 significant digits. Requires IEEE binary64 evaluation without
// contraction or reassociation (see -ffp-contract=off in CMakeLists.txt).

#include <cmath>

namespace kelvin::detail {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by intent
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    constexpr double to_double() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    const double e = b - (s - a);
    return {s, e};
}

inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    const double e = std::fma(a, b, -p);
    return {p, e};
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    const DoubleDouble t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator+(DoubleDouble a, double b) {
    DoubleDouble s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator+(double a, DoubleDouble b) { return b + a; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }
inline DoubleDouble operator-(DoubleDouble a, double b) { return a + (-b); }
inline DoubleDouble operator-(double a, DoubleDouble b) { return (-b) + a; }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(DoubleDouble a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(double a, DoubleDouble b) { return b * a; }

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + q3;
}

inline DoubleDouble operator/(DoubleDouble a, double b) { return a / DoubleDouble(b); }
inline DoubleDouble operator/(double a, DoubleDouble b) { return DoubleDouble(a) / b; }

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 ? -a : a; }

inline DoubleDouble from_long_double(long double v) {
    const double hi = static_cast<double>(v);
    const double lo = static_cast<double>(v - static_cast<long double>(hi));
    return quick_two_sum(hi, lo);
}

namespace dd_const {
inline constexpr DoubleDouble pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DoubleDouble inv_pi{0.3183098861837907, -1.9678676675182486e-17};
inline constexpr DoubleDouble two_over_pi{0.6366197723675814, -3.935735335036497e-17};
inline constexpr DoubleDouble four_over_pi{1.2732395447351628, -7.871470670072994e-17};
inline constexpr DoubleDouble euler_gamma{0.5772156649015329, -4.942915152430645e-18};
}  // namespace dd_const

}  // namespace kelvin::detail
