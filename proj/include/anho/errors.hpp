#pragma once

#include <stdexcept>
#include <string>

namespace anho {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quadrature ran out of subdivision budget; carries the best estimate and
/// the accumulated error bound so callers can decide whether to accept it.
struct QuadratureError : SolverError {
    QuadratureError(const std::string& msg, double estimate, double bound)
        : SolverError(msg), best_estimate(estimate), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

/// A search bracket did not contain what it was supposed to (an interior
/// minimum, a stationary point, an eigenvalue).
struct BracketError : SolverError {
    using SolverError::SolverError;
};

}  // namespace anho
