#pragma once

#include "anho/oscillator.hpp"
#include "anho/poly.hpp"

#include <span>
#include <vector>

namespace anho {

inline constexpr int max_expansion_order = 40;

/// Fixing of the homogeneous H_n admixture that each order's equation leaves
/// free. The energy coefficients are identical in both gauges; the truncated
/// wave function (and with it the variational estimator at finite order) is
/// not.
enum class HierarchyGauge {
    /// Corrections carry no u^n monomial term, so the order-m wave function
    /// keeps the zeroth-order value of its n-th derivative at the origin.
    /// This is the convention the published benchmark energies follow.
    origin,
    /// Corrections carry no H_n component (intermediate normalization).
    hermite_orthogonal,
};

/// Order-by-order solution of the rearranged reduced equation for state n:
/// reduced wave-function corrections xi[j] (polynomials in u, valid on the
/// half line x > 0) and energy coefficients energies[j] in energy units.
struct ExpansionSolution {
    OscillatorSpec spec;
    ScaledCouplings couplings;
    int state_n = 0;
    int order_m = 0;
    HierarchyGauge gauge = HierarchyGauge::origin;
    std::vector<Poly> xi;               // xi[j], j = 0..order_m
    std::vector<HermiteCoeffs> xi_h;    // the same corrections in the Hermite basis
    std::vector<real> energies;         // E_nj
    HermiteCoeffs xi_total;             // sum_j xi_h[j], cached by solve_hierarchy

    /// sum_j xi[j] in the Hermite basis (the order-m reduced wave function).
    const HermiteCoeffs& xi_sum() const;
    /// 2 * sum_j energies[j] / (hbar * Omega_tilde).
    real epsilon_sum() const;
};

/// Right-hand side of the rearranged equation applied to xi, in the scaled
/// coordinate: 2g u^N xi' - r u^2 xi - g u^(N-1) (2u^2 - N) xi.
Poly apply_perturbation(const Poly& xi, const ScaledCouplings& c, int N);
HermiteCoeffs apply_perturbation(const HermiteCoeffs& xi, const ScaledCouplings& c, int N);

/// Solves the hierarchy for state n in {0, 1} up to order m at parameter
/// Omega. Order 0 is xi_0 = H_n, E_n0 = hbar*Omega_tilde*(n + 1/2); each
/// higher order removes the resonant H_n component of its source to fix
/// E_nj and divides the rest mode-by-mode, then applies the gauge.
ExpansionSolution solve_hierarchy(const OscillatorSpec& spec, int n, const real& Omega, int m,
                                  HierarchyGauge gauge = HierarchyGauge::origin);

/// Truncated-series energy sum_j E_nj (the expansion evaluated at delta = 1).
real direct_energy(const ExpansionSolution& sol);

/// Unnormalized wave function e^{-gamma|x|^(N+1) - beta x^2} xi(u_scale|x|),
/// extended to the full line with parity sign(x)^n.
real wavefunction(const ExpansionSolution& sol, const real& x);
/// d psi/dx for x > 0, analytic from the ansatz.
real wavefunction_derivative(const ExpansionSolution& sol, const real& x);

/// Maximum absolute residual of the exact (delta = 1) reduced equation over
/// the grid, with the order-m xi and E substituted, normalized by the
/// maximum of |xi| on the grid. Grid points must be > 0.
real residual(const ExpansionSolution& sol, std::span<const real> grid_x);

/// Uniform grid on (0, x_max] with x_max where the squared ansatz weight has
/// decayed to e^{-exponent} (the region where the wave function is sizable).
std::vector<real> default_residual_grid(const ExpansionSolution& sol, int points = 256,
                                        const real& exponent = 10);

}  // namespace anho
