#pragma once

// Analytic bounds on the truncation of the imaginary-axis integral
//   I2 = sum_{k<n} (rho^k/k!) (int_0^inf - int_xi0^inf) xi^{2k} g(xi) dxi + R_n,
//   g(xi) = e^{-x c xi} cos(s x sqrt(1+xi^2)) / sqrt(1+xi^2),
// and on Gamma(a, chi), together with their measured counterparts.

#include "kelvin/eval_point.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kelvin {

enum class TailRegime {
    exponential,       ///< 2 e^{-M u0 c}, needs n < M u0 c
    polynomial,        ///< 2 e^{-2 M u0 c} sum_{k<n} (M u0^2)^k, needs n - 1 <= M u0 c
    incomplete_gamma,  ///< sum_{k<n} (M c^2)^{-k} Gamma(2k, 2 M u0 c) / (4^k k!)
};

const char* tail_regime_name(TailRegime r);

struct TailBound {
    double value = 0.0;
    TailRegime regime = TailRegime::incomplete_gamma;
};

struct BoundReport {
    EvalPoint point;
    int n = 0;
    double rn_bound = 0.0;
    double tail_bound = 0.0;
    TailRegime tail_regime = TailRegime::incomplete_gamma;
    /// Worst Gamma(a, chi) / (2 chi^a e^{-chi}) over a grid; NaN when not run.
    double inc_gamma_margin = 0.0;
    std::optional<double> measured_rn;
    std::optional<double> measured_tail;
};

/// M^{-n} Gamma(2n) / n!, evaluated through log-gamma.
double remainder_bound(int n, double M);

/// 2 e^{-M u0 c}. Valid for n < M u0 c.
double tail_bound_exponential(const EvalPoint& pt);
/// 2 e^{-2 M u0 c} sum_{k<n} (M u0^2)^k. Valid for n - 1 <= M u0 c.
double tail_bound_polynomial(int n, const EvalPoint& pt);
/// The incomplete-gamma sum both of the above are derived from; always valid.
double tail_bound_incomplete_gamma(int n, const EvalPoint& pt);

/// Smaller of the exponential and polynomial bounds where their hypotheses
/// hold; the incomplete-gamma sum when neither does.
TailBound tail_bound(int n, const EvalPoint& pt);

/// R_n = int_0^xi0 [sum_{k>=n} (rho xi^2)^k / k!] g(xi) dxi by quadrature.
double measure_remainder(const EvalPoint& pt, int n);
/// T = int_xi0^inf [sum_{k<n} (rho xi^2)^k / k!] g(xi) dxi by quadrature.
double measure_tail(const EvalPoint& pt, int n);

/// Measures R_n and T and checks |R_n| < remainder_bound and |T| < tail_bound.
/// Throws BoundViolated otherwise.
BoundReport verify_remainder(const EvalPoint& pt, int n);

/// Grid of (a, chi) with chi evenly spaced on [1, 50] and a on [0, chi].
std::vector<std::pair<double, double>> inc_gamma_grid(int n_chi = 50, int n_a = 50);

/// Worst ratio Gamma(a, chi) / (2 chi^a e^{-chi}) over the grid; throws
/// DomainError for points outside 0 <= a <= chi, chi >= 1 and BoundViolated
/// if any ratio exceeds 1.
BoundReport verify_inc_gamma_bound(std::span<const std::pair<double, double>> grid);

}  // namespace kelvin
