#include "anho/numerov.hpp"

#include "anho/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace anho {

namespace {

using ld = long double;

struct Grid {
    ld h;
    int steps;
    std::vector<ld> V;       // potential samples V(x_i), i = 0..steps
    ld two_m_over_h2;        // 2m/hbar^2
};

Grid make_grid(const OscillatorSpec& spec, double L, int steps) {
    Grid g;
    g.steps = steps;
    g.h = static_cast<ld>(L) / steps;
    const ld m = to_double(spec.mass), w = to_double(spec.omega);
    const ld mu = to_double(spec.mu), hb = to_double(spec.hbar);
    const int N = spec.N;
    g.two_m_over_h2 = 2 * m / (hb * hb);
    g.V.resize(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const ld x = g.h * i;
        ld xN = 1;
        for (int k = 0; k < 2 * N; ++k) xN *= x;
        g.V[i] = m * w * w * x * x / 2 + mu / (2 * N) * xN;
    }
    return g;
}

// y'' = f y with f_i = (2m/hbar^2)(V_i - E); Numerov step
// y_{i+1}(1 - T_{i+1}) = 2 y_i (1 + 5 T_i) - y_{i-1}(1 - T_{i-1}), T = h^2 f/12.
struct March {
    const Grid& g;
    ld E;
    ld T(int i) const { return g.h * g.h * g.two_m_over_h2 * (g.V[i] - E) / 12; }
};

/// Outward solution y_0..y_last satisfying the parity condition at x = 0.
std::vector<ld> integrate_out(const Grid& g, ld E, ParityBoundary bc, int last) {
    March m{g, E};
    std::vector<ld> y(last + 1);
    if (bc == ParityBoundary::even) {
        // y(-h) = y(h): the i = 0 step collapses to an explicit start.
        y[0] = 1;
        y[1] = y[0] * (1 + 5 * m.T(0)) / (1 - m.T(1));
    } else {
        y[0] = 0;
        y[1] = 1;
    }
    for (int i = 1; i < last; ++i)
        y[i + 1] = (2 * y[i] * (1 + 5 * m.T(i)) - y[i - 1] * (1 - m.T(i - 1))) / (1 - m.T(i + 1));
    return y;
}

/// Inward solution y_first..y_steps decaying at the right edge.
std::vector<ld> integrate_in(const Grid& g, ld E, int first) {
    March m{g, E};
    const int n = g.steps;
    std::vector<ld> y(n + 1);
    y[n] = 0;
    y[n - 1] = 1e-30L;
    for (int i = n - 1; i > first; --i)
        y[i - 1] = (2 * y[i] * (1 + 5 * m.T(i)) - y[i + 1] * (1 - m.T(i + 1))) / (1 - m.T(i - 1));
    return y;
}

int count_sign_changes(const std::vector<ld>& y, int from, int to) {
    int nodes = 0;
    ld prev = 0;
    for (int i = from; i <= to; ++i) {
        if (y[i] == 0) continue;
        if (prev != 0 && y[i] * prev < 0) ++nodes;
        prev = y[i];
    }
    return nodes;
}

/// Node count of the outward solution over (0, L], marching in place with
/// rescaling so the forbidden-region growth cannot overflow.
int nodes_at(const Grid& g, ld E, ParityBoundary bc) {
    March m{g, E};
    ld y0, y1;
    if (bc == ParityBoundary::even) {
        y0 = 1;
        y1 = y0 * (1 + 5 * m.T(0)) / (1 - m.T(1));
    } else {
        y0 = 0;
        y1 = 1;
    }
    int nodes = 0;
    ld prev = (y0 != 0) ? y0 : y1;
    if (y1 != 0 && prev != 0 && y1 * prev < 0) ++nodes;
    if (y1 != 0) prev = y1;
    for (int i = 1; i < g.steps; ++i) {
        ld y2 = (2 * y1 * (1 + 5 * m.T(i)) - y0 * (1 - m.T(i - 1))) / (1 - m.T(i + 1));
        if (y2 != 0) {
            if (prev != 0 && y2 * prev < 0) ++nodes;
            prev = y2;
        }
        if (std::abs(y2) > 1e280L) {
            y1 *= 1e-280L;
            y2 *= 1e-280L;
            prev = y2;
        }
        y0 = y1;
        y1 = y2;
    }
    return nodes;
}

int match_index(const Grid& g, ld E) {
    int m = g.steps;
    while (m > 0 && g.V[m] > E) --m;  // outermost classically allowed point
    return std::clamp(m, 4, g.steps - 6);
}

/// Log-derivative mismatch of the outward and inward branches at the match
/// point; zero exactly at eigenvalues.
ld mismatch(const Grid& g, ld E, ParityBoundary bc, int m) {
    auto yo = integrate_out(g, E, bc, m + 1);
    auto yi = integrate_in(g, E, m - 1);
    if (yo[m] == 0 || yi[m] == 0) return std::numeric_limits<ld>::quiet_NaN();
    return (yo[m + 1] - yo[m - 1]) / yo[m] - (yi[m + 1] - yi[m - 1]) / yi[m];
}

}  // namespace

double default_domain(const OscillatorSpec& spec, int n) {
    spec.validate();
    // Energy guess from a cheap order-2 expansion at the characteristic scale.
    const real what = spec.frequency_scale();
    double E_guess = to_double(direct_energy(solve_hierarchy(spec, n, what, 2)));
    const double E_use = 1.25 * E_guess + to_double(spec.hbar * what);

    auto V = [&](double x) { return to_double(spec.potential(real(x))); };
    double hi = 1;
    while (V(hi) < E_use) hi *= 2;
    double lo = 0;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        (V(mid) < E_use ? lo : hi) = mid;
    }
    const double x_t = hi;

    // Extend until the WKB decay integral from the turning point reaches 34
    // (tail suppression ~ e^{-34}).
    const double c = 2 * to_double(spec.mass) / (to_double(spec.hbar) * to_double(spec.hbar));
    auto wkb = [&](double L) {
        const int K = 512;
        double s = 0;
        for (int i = 0; i < K; ++i) {
            double x = x_t + (L - x_t) * (i + 0.5) / K;
            double q = c * (V(x) - E_use);
            if (q > 0) s += std::sqrt(q) * (L - x_t) / K;
        }
        return s;
    };
    double L = x_t * 1.05 + 0.1;
    while (wkb(L) < 34) L *= 1.15;
    return L;
}

OracleSolution numerov_solve(const OscillatorSpec& spec, int n, double L, int steps) {
    spec.validate();
    if (n != 0 && n != 1) throw std::invalid_argument("numerov_solve: state n must be 0 or 1");
    if (steps < 4000) throw std::invalid_argument("numerov_solve: need steps >= 4000");
    if (steps % 2) throw std::invalid_argument("numerov_solve: steps must be even (Simpson norm)");
    if (!(L > 0)) throw std::invalid_argument("numerov_solve: need L > 0");

    const ParityBoundary bc = (n % 2 == 0) ? ParityBoundary::even : ParityBoundary::odd;
    const int target_nodes = n / 2;
    const Grid g = make_grid(spec, L, steps);

    // Bracket the eigenvalue by node counting, scanning up from the well
    // bottom in steps of the characteristic energy scale.
    const ld scale = static_cast<ld>(to_double(spec.hbar * spec.frequency_scale()));
    const ld dE = scale / 4;
    ld E_lo = 0, E_hi = 0;
    bool bracketed = false;
    for (int i = 1; i <= 4000; ++i) {
        E_hi = dE * i;
        if (nodes_at(g, E_hi, bc) > target_nodes) {
            E_lo = dE * (i - 1);
            bracketed = true;
            break;
        }
    }
    if (!bracketed)
        throw BracketError("numerov_solve: node-count scan found no eigenvalue; "
                           "L is too small or steps too few for this potential");

    // Narrow by node count, then refine on the derivative mismatch.
    for (int i = 0; i < 24; ++i) {
        ld mid = (E_lo + E_hi) / 2;
        (nodes_at(g, mid, bc) > target_nodes ? E_hi : E_lo) = mid;
    }

    int m = match_index(g, E_hi);
    ld f_lo = mismatch(g, E_lo, bc, m);
    ld f_hi = mismatch(g, E_hi, bc, m);
    int guard = 0;
    while (!(f_lo * f_hi < 0) && guard++ < 40) {
        // No sign change across the narrowed bracket (match-point artifact):
        // keep narrowing by nodes and move the match point.
        ld mid = (E_lo + E_hi) / 2;
        (nodes_at(g, mid, bc) > target_nodes ? E_hi : E_lo) = mid;
        m = std::clamp(m + (guard % 5), 4, g.steps - 6);
        f_lo = mismatch(g, E_lo, bc, m);
        f_hi = mismatch(g, E_hi, bc, m);
    }
    if (f_lo * f_hi < 0) {
        for (int i = 0; i < 120; ++i) {
            const ld mid = (E_lo + E_hi) / 2;
            const ld f_mid = mismatch(g, mid, bc, m);
            if (f_mid == 0) {
                E_lo = E_hi = mid;
                break;
            }
            if (f_lo * f_mid < 0) {
                E_hi = mid;
                f_hi = f_mid;
            } else {
                E_lo = mid;
                f_lo = f_mid;
            }
            if (E_hi - E_lo <= std::max<ld>(1, std::abs(mid)) * 1e-15L) break;
        }
    }
    const ld E = (E_lo + E_hi) / 2;

    // Assemble the matched eigenfunction.
    auto yo = integrate_out(g, E, bc, m);
    auto yi = integrate_in(g, E, m);
    const ld join = yo[m] / yi[m];
    std::vector<ld> psi(g.steps + 1);
    for (int i = 0; i <= m; ++i) psi[i] = yo[i];
    for (int i = m + 1; i <= g.steps; ++i) psi[i] = yi[i] * join;

    // Simpson normalization of the full-line integral 2 * int_0^L psi^2.
    ld s = psi[0] * psi[0] + psi[g.steps] * psi[g.steps];
    for (int i = 1; i < g.steps; ++i) s += psi[i] * psi[i] * (i % 2 ? 4 : 2);
    const ld norm = std::sqrt(2 * s * g.h / 3);
    ld sign = 1;
    for (int i = 0; i <= g.steps; ++i)
        if (std::abs(psi[i]) > 1e-6L) {  // first substantial value fixes the sign
            sign = psi[i] > 0 ? 1 : -1;
            break;
        }
    for (auto& v : psi) v *= sign / norm;

    OracleSolution out;
    out.energy = static_cast<double>(E);
    out.boundary = bc;
    out.grid.resize(g.steps + 1);
    out.psi.resize(g.steps + 1);
    for (int i = 0; i <= g.steps; ++i) {
        out.grid[i] = static_cast<double>(g.h * i);
        out.psi[i] = static_cast<double>(psi[i]);
    }
    out.nodes = count_sign_changes(psi, 1, g.steps);

    if (!(g.V[g.steps] >= E + 50)) {
        std::ostringstream msg;
        msg << "numerov_solve: V(L) = " << static_cast<double>(g.V[g.steps])
            << " is not 50 energy units above E = " << out.energy << "; increase L";
        throw BracketError(msg.str());
    }
    if (out.nodes != target_nodes)
        throw BracketError("numerov_solve: converged to the wrong node count; "
                           "increase steps or adjust L");
    return out;
}

OracleSolution oracle_solve(const OscillatorSpec& spec, int n, int steps) {
    return numerov_solve(spec, n, default_domain(spec, n), steps);
}

std::vector<std::pair<double, double>> compare_wavefunction(const ExpansionSolution& sol,
                                                            const OracleSolution& oracle,
                                                            const QuadratureSettings& settings) {
    if (oracle.grid.empty()) throw std::invalid_argument("compare_wavefunction: empty oracle");
    // Unit full-line norm for the expansion wave function.
    auto psi2 = [&](const real& x) {
        const real p = wavefunction(sol, x);
        return p * p;
    };
    const real norm2 = 2 * weighted_integral(psi2, settings, sol.couplings, sol.spec.N);
    if (!(norm2 > 0)) throw SolverError("compare_wavefunction: vanishing norm");
    const real inv_norm = 1 / sqrt(norm2);

    std::vector<double> approx(oracle.grid.size());
    double amax = 0, omax = 0;
    for (std::size_t i = 0; i < oracle.grid.size(); ++i) {
        approx[i] = to_double(wavefunction(sol, real(oracle.grid[i])) * inv_norm);
        amax = std::max(amax, std::abs(approx[i]));
        omax = std::max(omax, std::abs(oracle.psi[i]));
    }

    // Match signs at the first grid point where both are sizable.
    for (std::size_t i = 0; i < approx.size(); ++i) {
        if (std::abs(oracle.psi[i]) > 1e-3 * omax && std::abs(approx[i]) > 1e-3 * amax) {
            if (approx[i] * oracle.psi[i] < 0)
                for (auto& v : approx) v = -v;
            break;
        }
    }

    std::vector<std::pair<double, double>> ratio;
    for (std::size_t i = 0; i < approx.size(); ++i)
        if (std::abs(oracle.psi[i]) > 1e-3 * omax)
            ratio.emplace_back(oracle.grid[i], approx[i] / oracle.psi[i]);
    return ratio;
}

}  // namespace anho
