#pragma once

#include <stdexcept>
#include <string>

namespace kelvin {

/// Argument outside the mathematical or supported domain of a routine.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested order exceeds the configured cap.
class OrderOverflow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The asymptotic expansion is not applicable at this point (e.g. M c^2 <= 1).
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A measured quantity exceeded its analytic bound.
class BoundViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A summation or quadrature exhausted its budget before reaching tolerance.
/// Carries the best estimate obtained so far.
class AccuracyNotReached : public std::runtime_error {
public:
    AccuracyNotReached(const std::string& what, double best_estimate,
                       double error_estimate)
        : std::runtime_error(what),
          best_estimate_(best_estimate),
          error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

}  // namespace kelvin
