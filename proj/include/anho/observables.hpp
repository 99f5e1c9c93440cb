#pragma once

#include "anho/hierarchy.hpp"
#include "anho/quadrature.hpp"

namespace anho {

enum class Estimator { direct, variational };

const char* to_string(Estimator e);
Estimator estimator_from_string(const std::string& s);

struct EnergyEstimate {
    real value;            // energy units
    Estimator estimator = Estimator::direct;
    real Omega = 0;
    int order = 0;
    real norm = 0;         // <psi|psi> on the half line (variational only)
};

/// Rayleigh quotient <psi|H|psi>/<psi|psi> of the order-m truncated wave
/// function, in first-derivative (Dirichlet) form:
///   [ int_0^inf (hbar^2/2m) psi'(x)^2 + V(x) psi(x)^2 dx ] / int_0^inf psi^2 dx.
/// Half-line integrals; the parity factor cancels in the ratio.
EnergyEstimate energy_variational(const ExpansionSolution& sol,
                                  const QuadratureSettings& settings = {});

/// Percentile error 100*|approx - reference|/|reference|; rejects reference = 0.
real error_metric(const real& approx, const real& reference);

}  // namespace anho
