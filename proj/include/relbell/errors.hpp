#pragma once

#include <stdexcept>
#include <string>

namespace relbell {

/// Argument outside the mathematical domain of an operation
/// (superluminal velocity, non-positive width, negative radius, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries the best estimate reached and its error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double residual)
        : std::runtime_error(what), best_estimate_(best_estimate), residual_(residual) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double residual() const noexcept { return residual_; }

private:
    double best_estimate_;
    double residual_;
};

/// A threshold search found no sign change on its bracket: the Bell bound is
/// never reached for the given packet.
class NotReachableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal numerical invariant violated (e.g. outcome probabilities that do
/// not sum to one).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace relbell
