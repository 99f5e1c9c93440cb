#include "anho/hierarchy.hpp"

#include "anho/errors.hpp"

#include <stdexcept>

namespace anho {

const HermiteCoeffs& ExpansionSolution::xi_sum() const {
    if (xi_total.is_zero()) {
        auto* self = const_cast<ExpansionSolution*>(this);
        for (const auto& x : xi_h) self->xi_total += x;
    }
    return xi_total;
}

real ExpansionSolution::epsilon_sum() const {
    real e = 0;
    for (const auto& v : energies) e += v;
    return 2 * e / (spec.hbar * couplings.Omega_tilde);
}

Poly apply_perturbation(const Poly& xi, const ScaledCouplings& c, int N) {
    Poly out = (2 * c.g) * xi.derivative().times_u_pow(N);
    out -= c.r * xi.times_u_pow(2);
    out -= c.g * (real(2) * xi.times_u_pow(N + 1) - real(N) * xi.times_u_pow(N - 1));
    return out;
}

HermiteCoeffs apply_perturbation(const HermiteCoeffs& xi, const ScaledCouplings& c, int N) {
    HermiteCoeffs out = (2 * c.g) * xi.derivative().times_u_pow(N);
    out -= c.r * xi.times_u_pow(2);
    out -= c.g * (real(2) * xi.times_u_pow(N + 1) - real(N) * xi.times_u_pow(N - 1));
    return out;
}

ExpansionSolution solve_hierarchy(const OscillatorSpec& spec, int n, const real& Omega, int m,
                                  HierarchyGauge gauge) {
    spec.validate();
    if (n != 0 && n != 1) throw std::invalid_argument("solve_hierarchy: state n must be 0 or 1");
    if (m < 0 || m > max_expansion_order)
        throw std::invalid_argument("solve_hierarchy: order must be in [0, 40]");

    ExpansionSolution sol;
    sol.spec = spec;
    sol.couplings = scaled_couplings(spec, Omega);
    sol.state_n = n;
    sol.order_m = m;
    sol.gauge = gauge;

    const real half_hbar_Ot = spec.hbar * sol.couplings.Omega_tilde / 2;
    const auto ladder = hermite_ladder(std::max((spec.N + 1) * m + n, n));

    std::vector<HermiteCoeffs> xi(m + 1);
    std::vector<real> eps(m + 1);  // eps_j = 2 E_nj / (hbar Omega_tilde)
    xi[0] = to_hermite(ladder[n]);
    eps[0] = 2 * n + 1;

    // Matching powers of the bookkeeping parameter in the rearranged
    // equation gives, with L_n = d^2/du^2 - 2u d/du + 2n,
    //   L_n xi_j = P[xi_{j-1}] - sum_{k=1..j} eps_k xi_{j-k}.
    // L_n H_k = 2(n - k) H_k, so the H_n component of the source must vanish
    // (that fixes eps_j; only the k = j term carries a nonzero H_n component)
    // and every other component divides out.
    for (int j = 1; j <= m; ++j) {
        HermiteCoeffs source = apply_perturbation(xi[j - 1], sol.couplings, spec.N);
        for (int k = 1; k < j; ++k) source.axpy(-eps[k], xi[j - k]);

        const real pivot = xi[0].coeff(n);
        if (pivot == 0)
            throw SolverError("solve_hierarchy: resonant component cannot be cancelled");
        eps[j] = source.coeff(n) / pivot;
        source.axpy(-eps[j], xi[0]);

        std::vector<real> cj(std::max(source.max_index() + 1, 0), real(0));
        for (int k = 0; k <= source.max_index(); ++k) {
            if (k == n) continue;
            cj[k] = source.coeff(k) / real(2 * (n - k));
        }
        HermiteCoeffs x(std::move(cj));
        if (gauge == HierarchyGauge::origin) {
            // Cancel the u^n monomial term through the free H_n admixture.
            real mono = 0;
            for (int k = n; k <= x.max_index(); ++k) mono += x.coeff(k) * ladder[k].coeff(n);
            x.set_coeff(n, -mono / ladder[n].coeff(n));
        }
        xi[j] = std::move(x);
    }

    sol.xi_h = std::move(xi);
    sol.energies.resize(m + 1);
    for (int j = 0; j <= m; ++j) sol.energies[j] = eps[j] * half_hbar_Ot;
    sol.xi.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
        Poly p;
        const auto& h = sol.xi_h[j];
        for (int k = 0; k <= h.max_index(); ++k)
            if (h.coeff(k) != 0) p += h.coeff(k) * ladder[k];
        sol.xi[j] = std::move(p);
    }
    for (const auto& x : sol.xi_h) sol.xi_total += x;
    return sol;
}

real direct_energy(const ExpansionSolution& sol) {
    real e = 0;
    for (const auto& v : sol.energies) e += v;
    return e;
}

namespace {

real ansatz_exponent(const ExpansionSolution& sol, const real& ax) {
    const auto& c = sol.couplings;
    return c.gamma * pow_int(ax, sol.spec.N + 1) + c.beta * ax * ax;
}

}  // namespace

real wavefunction(const ExpansionSolution& sol, const real& x) {
    if (sol.state_n == 1 && x == 0) return 0;
    const real ax = abs(x);
    const int sign = (sol.state_n == 1 && x < 0) ? -1 : 1;
    const real xi_val = sol.xi_sum()(sol.couplings.u_scale * ax);
    return sign * exp(-ansatz_exponent(sol, ax)) * xi_val;
}

real wavefunction_derivative(const ExpansionSolution& sol, const real& x) {
    if (!(x > 0))
        throw std::invalid_argument("wavefunction_derivative: defined for x > 0");
    const auto& c = sol.couplings;
    const HermiteCoeffs& xs = sol.xi_sum();
    const real u = c.u_scale * x;
    const real Ap = c.gamma * (sol.spec.N + 1) * pow_int(x, sol.spec.N) + 2 * c.beta * x;
    return exp(-ansatz_exponent(sol, x)) * (c.u_scale * xs.derivative()(u) - Ap * xs(u));
}

real residual(const ExpansionSolution& sol, std::span<const real> grid_x) {
    if (grid_x.empty()) throw std::invalid_argument("residual: empty grid");
    const auto& c = sol.couplings;
    const HermiteCoeffs& xs = sol.xi_sum();
    const real eps = sol.epsilon_sum();

    // Scaled-coordinate residual of the full (delta = 1) equation:
    //   R(u) = xi'' - 2u xi' + (eps - 1) xi - P[xi],
    // where the left part is diagonal in the Hermite basis,
    // (H_k'' - 2u H_k') = -2k H_k. The x-space equation is u_scale^2 R(u).
    HermiteCoeffs lhs = xs;
    {
        std::vector<real> lc = lhs.coeffs();
        for (int k = 0; k < static_cast<int>(lc.size()); ++k)
            lc[k] *= (eps - 1 - 2 * k);
        lhs = HermiteCoeffs(std::move(lc));
    }
    const HermiteCoeffs res = lhs - apply_perturbation(xs, c, sol.spec.N);

    real worst = 0, scale = 0;
    for (const real& x : grid_x) {
        if (!(x > 0)) throw std::invalid_argument("residual: grid points must be > 0");
        const real u = c.u_scale * x;
        const real rv = abs(res(u));
        const real xv = abs(xs(u));
        if (rv > worst) worst = rv;
        if (xv > scale) scale = xv;
    }
    if (scale == 0) throw SolverError("residual: xi vanishes on the whole grid");
    return c.u_scale * c.u_scale * worst / scale;
}

std::vector<real> default_residual_grid(const ExpansionSolution& sol, int points,
                                        const real& exponent) {
    if (points < 2) throw std::invalid_argument("default_residual_grid: need >= 2 points");
    const auto& c = sol.couplings;
    // x_max where 2*gamma*x^(N+1) + 2*beta*x^2 = exponent (monotone; bisect).
    real lo = 0, hi = 1;
    auto f = [&](const real& x) { return 2 * ansatz_exponent(sol, x) - exponent; };
    while (f(hi) < 0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        real mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    std::vector<real> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = hi * real(i + 1) / points;
    return grid;
}

}  // namespace anho
