#pragma once

// Brute-force quadrature of the Kelvin source integral and of the
// intermediate integrals behind its small-x expansion. These are the ground
// truth the series methods are checked against.

#include "kelvin/eval_point.hpp"
#include "kelvin/quadrature.hpp"

#include <utility>

namespace kelvin {

/// F(x, rho, alpha) = int_{-inf}^{inf} exp(-rho cosh(2u - i alpha) / 2) cos(x cosh u) du,
/// real part. |error| <= abs_tol is the target; throws AccuracyNotReached
/// when the reported estimate exceeds it.
QuadResult oracle_F(const EvalPoint& pt, double abs_tol = 1e-12);

/// int_0^p exp(-M t^2) sin(2 M t) / sqrt(p^2 - t^2) dt. Requires alpha = 0.
QuadResult oracle_I1_alpha0(const EvalPoint& pt);

/// int_0^p exp(-M t^2) sin(2 M c t) cos(2 M s sqrt(p^2 - t^2)) / sqrt(p^2 - t^2) dt.
QuadResult oracle_I1_alpha(const EvalPoint& pt);

/// int_0^xi0 exp(rho xi^2 - x c xi) cos(s x sqrt(1 + xi^2)) / sqrt(1 + xi^2) dxi.
QuadResult oracle_I2(const EvalPoint& pt);

/// C_k(x, alpha) = (2/pi) int_0^inf t^{2k} e^{-ct} cos(s sqrt(x^2+t^2)) / sqrt(x^2+t^2) dt,
/// evaluated both in this form and after t = x xi. Throws ConsistencyError
/// if the two disagree beyond 1e-10 relative plus their error estimates.
QuadResult oracle_Ck(int k, double x, double alpha);

/// Both sides of
///   int_0^p e^{-M t^2} t^{2k+1} (p^2-t^2)^{mu-1} dt
///     = p^{2k+2mu} k! Gamma(mu) / (2 Gamma(k+mu+1)) 1F1(k+1; k+mu+1; -M p^2),
/// left by quadrature, right through kummer_1f1.
std::pair<double, double> oracle_moment_identity(int k, double mu, double M, double p);

}  // namespace kelvin
