#pragma once

#include "anho/hierarchy.hpp"
#include "anho/quadrature.hpp"

#include <utility>
#include <vector>

namespace anho {

enum class ParityBoundary { even, odd };  // psi'(0) = 0 / psi(0) = 0

/// Independent grid eigensolution used as ground truth. psi is normalized so
/// that the full-line integral of psi^2 is 1 (by parity, 2x the half line).
struct OracleSolution {
    double energy = 0;
    std::vector<double> grid;  // uniform on [0, L]
    std::vector<double> psi;
    int nodes = 0;             // interior nodes on (0, L)
    ParityBoundary boundary = ParityBoundary::even;
};

/// Fourth-order Numerov shooting solve for state n in {0, 1} on [0, L]:
/// outward/inward integration matched near the outer classical turning
/// point, eigenvalue bracketed by node counting and refined by bisection on
/// the log-derivative mismatch. Throws BracketError with a diagnostic when L
/// or steps are insufficient.
OracleSolution numerov_solve(const OscillatorSpec& spec, int n, double L, int steps);

/// Domain size from the decay budget: L beyond the turning point of an
/// order-2 expansion energy estimate by 34 WKB decay lengths.
double default_domain(const OscillatorSpec& spec, int n);

/// numerov_solve with default_domain and a grid fine enough for ~1e-10
/// eigenvalue accuracy.
OracleSolution oracle_solve(const OscillatorSpec& spec, int n, int steps = 32768);

/// Pointwise ratio R(x) = psi_approx(x)/psi_oracle(x) on the oracle grid,
/// restricted to |psi_oracle| > 1e-3 * max. Both wave functions are taken at
/// unit full-line norm with signs matched at the first sizable grid point.
std::vector<std::pair<double, double>> compare_wavefunction(
    const ExpansionSolution& sol, const OracleSolution& oracle,
    const QuadratureSettings& settings = {});

}  // namespace anho
