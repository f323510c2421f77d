#pragma once

// Series and asymptotic evaluators for F(x, rho, alpha): the convergent Bessho
// series, Ursell's expansion, and the Struve-function expansion
//
//   F = -pi e^{-rho/2} S1 + pi e^{rho/2} sum_{k<n} M^{-k} C_k(x, alpha) / (4^k k!) + saddle,
//
// where S1 is a convergent Struve double sum and C_k are the coefficients of
// the asymptotic part.

#include "kelvin/eval_point.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kelvin {

enum class Method { bessho, ursell, paris };

const char* method_name(Method m);

struct TruncationPolicy {
    /// Number of asymptotic terms; empty means max(1, floor(M c^2) - 1).
    std::optional<int> n;
    /// Convergent sums stop after three consecutive terms below this
    /// fraction of the partial sum.
    double series_rel_tol = 1e-16;
    int max_terms = 500;
    /// Below this |alpha| the alpha = 0 saddle estimate is used.
    double alpha_switch = 0.02;
};

struct StruveComponents {
    double struve_sum = 0.0;
    double asymptotic_sum = 0.0;
    double saddle = 0.0;
};

struct MethodResult {
    double value = 0.0;
    Method method = Method::bessho;
    int terms_used = 0;
    int n_used = 0;
    double saddle_term = 0.0;
    double internal_error_estimate = 0.0;
    StruveComponents components;  ///< paris only
};

enum class Provenance { recurrence, quadrature };

const char* provenance_name(Provenance p);

struct CoefficientTable {
    double alpha = 0.0;
    double x = 0.0;
    std::vector<double> values;
    /// Per entry: the recurrence is used only at alpha = 0.
    std::vector<Provenance> provenance;
    std::vector<bool> cancellation_flags;
    /// (sum of magnitudes of the recurrence terms) / |C_k|; 1 for quadrature.
    std::vector<double> loss;
};

/// Largest k for which C_k tables are built.
inline constexpr int kMaxCoefficients = 30;

/// Bessho's series K_0(rho/2) J_0(x) + 2 sum (-1)^m cos(m alpha) K_m(rho/2) J_2m(x).
/// Throws AccuracyNotReached when max_terms is exhausted or cancellation
/// exceeds 1e12.
MethodResult bessho_F(const EvalPoint& pt, const TruncationPolicy& policy = {});

/// Ursell's expansion truncated at m <= M plus its saddle estimate. Requires M > 1.
MethodResult ursell_F(const EvalPoint& pt);

/// sum_r ((1/2)_r / r!) rho^r H_r(x), with H the scaled Struve function. alpha = 0 only.
double struve_sum_alpha0(const EvalPoint& pt, const TruncationPolicy& policy = {});

/// sum_r (rho^r/r!) sum_m ((-1)^m (m+1/2)_r / m!) (x s/2)^{2m} H_{m+r}(x c).
double struve_double_sum(const EvalPoint& pt, const TruncationPolicy& policy = {});

/// C_0(x) .. C_{n-1}(x) at alpha = 0 from
///   C_m = 2^m (1/2)_m K_m(x) - sum_{r<m} binom(m, r) x^{2(m-r)} C_r,
/// K_m(x) = x^m (H_m(x) - Y_m(x)). Entries losing more than six digits to
/// cancellation are flagged.
CoefficientTable ck_recurrence(int n, double x);

/// Integer coefficients a_j with C_m = sum_j a_j x^{2j} K_{m-j}(x), j = 0..m.
std::vector<std::int64_t> ck_symbolic_coefficients(int m);

/// C_0 .. C_{n-1} at (x, alpha). alpha = 0 uses the recurrence with
/// quadrature for flagged entries; alpha > 0 uses quadrature throughout.
CoefficientTable ck_table(int n, double x, double alpha);

/// sum_{k<n} M^{-k} C_k / (4^k k!) over all entries of the table.
double asymptotic_sum(const EvalPoint& pt, const CoefficientTable& ck);

/// The saddle-point integral at alpha = 0 without the e^{rho/2} factor:
/// e^{-M} / (M (1 + p^2)^{3/2}).
double saddle_integral_alpha0(const EvalPoint& pt);

/// Saddle contribution to F. For |alpha| < alpha_switch this is
/// e^{rho/2} saddle_integral_alpha0; otherwise
/// (pi/M)^{1/2} e^{-(M - rho/2) cos a} sin((M + rho/2) sin a + a/2), a = |alpha|.
double saddle_term(const EvalPoint& pt, double alpha_switch = 0.02);

/// Resolved number of asymptotic terms. Throws RegimeError when the default
/// is requested and M c^2 <= 1.
int resolve_n(const EvalPoint& pt, const TruncationPolicy& policy);

/// Struve-expansion evaluator. value is exactly
/// -pi e^{-rho/2} struve_sum + pi e^{rho/2} asymptotic_sum + saddle.
MethodResult paris_F(const EvalPoint& pt, const TruncationPolicy& policy = {});

/// F + pi e^{-rho/2} S1 - pi e^{rho/2} sum_{k<n} ..., with F from oracle_F at 1e-12.
double curly_F_residual(const EvalPoint& pt, int n);

}  // namespace kelvin
