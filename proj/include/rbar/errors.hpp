#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rbar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values live in different frequency contexts (distinct symbolic bases).
struct ContextMismatchError : Error {
    using Error::Error;
};

// A projection/transition was requested between levels that are not ordered
// under the integer-span relation.
struct NotRefinableError : Error {
    using Error::Error;
};

// Evaluation of an AP term at a cylindrical point whose level does not span
// the term's frequency.  The caller must refine the level first.
struct FrequencyNotInLevelError : Error {
    using Error::Error;
};

// Isometry transport between incompatible endpoint weights (t in {0,1} on
// one side only).
struct EndpointMismatchError : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.  Carries the partial
// estimate so callers can decide whether it is still usable.
struct QuadratureError : Error {
    QuadratureError(const std::string& msg, std::complex<double> value, double est_error)
        : Error(msg), partial_value(value), partial_error(est_error) {}
    std::complex<double> partial_value;
    double partial_error;
};

}  // namespace rbar
