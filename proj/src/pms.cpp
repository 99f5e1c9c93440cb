#include "anho/pms.hpp"

#include <algorithm>
#include <cmath>

namespace anho {

namespace {

constexpr int kMaxExtensions = 6;
const real kGoldenRelTol("1e-8");
const real kFlatRelTol("1e-10");
const real kDiffStep("1e-5");  // relative central-difference step in Omega

real golden_ratio_conjugate() {
    static const real c = (sqrt(real(5)) - 1) / 2;
    return c;
}

/// Golden-section minimizer on [a, b]; f assumed unimodal there.
template <class F>
std::pair<real, real> golden_min(F&& f, real a, real b, const real& rel_tol) {
    const real gr = golden_ratio_conjugate();
    real x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    real f1 = f(x1), f2 = f(x2);
    while (b - a > rel_tol * (abs(x1) + abs(x2)) / 2) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

std::size_t argmin_ok(const OmegaCurve& curve) {
    std::size_t best = curve.size();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (!curve[i].ok) continue;
        if (best == curve.size() || curve[i].energy < curve[best].energy) best = i;
    }
    if (best == curve.size()) throw SolverError("pms: every scan point failed");
    return best;
}

bool curve_is_flat(const OmegaCurve& curve) {
    real lo = 0, hi = 0, mid = 0;
    bool first = true;
    for (const auto& s : curve) {
        if (!s.ok) return false;
        if (first) {
            lo = hi = s.energy;
            first = false;
        } else {
            lo = std::min(lo, s.energy);
            hi = std::max(hi, s.energy);
        }
    }
    mid = (abs(lo) + abs(hi)) / 2;
    return hi - lo <= kFlatRelTol * (mid + real("1e-300"));
}

}  // namespace

const char* to_string(PmsKind k) {
    switch (k) {
        case PmsKind::stationary_point: return "stationary_point";
        case PmsKind::minimum: return "minimum";
        default: return "flattest_point";
    }
}

std::pair<real, real> default_bracket(const OscillatorSpec& spec) {
    const real w = spec.frequency_scale();
    return {w / 20, 20 * w};
}

OmegaCurve scan_omega(const OscillatorSpec& spec, int n, int order, Estimator estimator,
                      const real& lo, const real& hi, int points,
                      const QuadratureSettings& settings) {
    if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("scan_omega: need 0 < lo < hi");
    if (points < 16) throw std::invalid_argument("scan_omega: need points >= 16");
    OmegaCurve curve(points);
    for (int i = 0; i < points; ++i) {
        const real Omega = lo + (hi - lo) * i / (points - 1);
        curve[i].omega = Omega;
        try {
            auto sol = solve_hierarchy(spec, n, Omega, order);
            curve[i].energy = estimator == Estimator::direct
                                  ? direct_energy(sol)
                                  : energy_variational(sol, settings).value;
        } catch (const SolverError&) {
            curve[i].ok = false;
        }
    }
    return curve;
}

PmsResult pms_variational(const OscillatorSpec& spec, int n, int order, const Bracket& bracket,
                          const QuadratureSettings& settings, int points) {
    auto [lo, hi] = bracket.is_auto() ? default_bracket(spec) : *bracket.range;
    if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("pms_variational: need 0 < lo < hi");

    auto eval = [&](const real& Omega) {
        return energy_variational(solve_hierarchy(spec, n, Omega, order), settings).value;
    };

    OmegaCurve curve;
    std::size_t best = 0;
    for (int attempt = 0;; ++attempt) {
        curve = scan_omega(spec, n, order, Estimator::variational, lo, hi, points, settings);
        best = argmin_ok(curve);

        if (curve_is_flat(curve)) {
            // The mu -> 0 limit: the infimum sits at Omega -> 0+ and the curve
            // has sunk below resolution. Any interior point is the answer.
            best = std::clamp<std::size_t>(best, 1, curve.size() - 2);
            PmsResult res;
            res.Omega_star = curve[best].omega;
            res.energy = energy_variational(solve_hierarchy(spec, n, res.Omega_star, order), settings);
            res.curve = std::move(curve);
            res.kind = PmsKind::minimum;
            return res;
        }
        if (best > 0 && best + 1 < curve.size()) break;
        if (!bracket.is_auto())
            throw BracketError("pms_variational: minimum at bracket edge; widen the scan");
        if (attempt >= kMaxExtensions)
            throw BracketError("pms_variational: no interior minimum after widening the scan");
        if (best == 0) {
            hi = curve[1].omega;
            lo = lo / 8;
        } else {
            lo = curve[curve.size() - 2].omega;
            hi = hi * 8;
        }
    }

    auto [omega_star, e_star] =
        golden_min(eval, curve[best - 1].omega, curve[best + 1].omega, kGoldenRelTol);
    (void)e_star;
    PmsResult res;
    res.Omega_star = omega_star;
    res.energy = energy_variational(solve_hierarchy(spec, n, omega_star, order), settings);
    res.curve = std::move(curve);
    res.kind = PmsKind::minimum;
    return res;
}

namespace {

/// Direct-series energies for all orders 1..m at one Omega.
std::vector<real> direct_prefix_energies(const OscillatorSpec& spec, int n, const real& Omega,
                                         int m) {
    auto sol = solve_hierarchy(spec, n, Omega, m);
    std::vector<real> out(m + 1);
    real acc = 0;
    for (int j = 0; j <= m; ++j) {
        acc += sol.energies[j];
        out[j] = acc;
    }
    return out;
}

}  // namespace

std::vector<PmsResult> pms_direct_chain(const OscillatorSpec& spec, int n, int order,
                                        const Bracket& bracket, int points) {
    if (order < 1) throw std::invalid_argument("pms_direct: order must be >= 1");
    auto [lo, hi] = bracket.is_auto() ? default_bracket(spec) : *bracket.range;
    if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("pms_direct: empty bracket");
    if (points < 16) throw std::invalid_argument("pms_direct: need points >= 16");

    // One order-m solve per grid point (plus the +/- h companions) yields the
    // energies and derivatives of every order at once.
    std::vector<real> grid(points);
    std::vector<std::vector<real>> E(points), d(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * i / (points - 1);
        E[i] = direct_prefix_energies(spec, n, grid[i], order);
        auto Ep = direct_prefix_energies(spec, n, grid[i] * (1 + kDiffStep), order);
        auto Em = direct_prefix_energies(spec, n, grid[i] * (1 - kDiffStep), order);
        d[i].resize(order + 1);
        for (int j = 0; j <= order; ++j)
            d[i][j] = (Ep[j] - Em[j]) / (2 * grid[i] * kDiffStep);
    }

    auto deriv_at = [&](const real& Omega, int j) {
        auto Ep = direct_prefix_energies(spec, n, Omega * (1 + kDiffStep), j);
        auto Em = direct_prefix_energies(spec, n, Omega * (1 - kDiffStep), j);
        return (Ep[j] - Em[j]) / (2 * Omega * kDiffStep);
    };

    std::vector<PmsResult> chain;
    real prev_energy = 0;
    for (int j = 1; j <= order; ++j) {
        OmegaCurve curve(points);
        for (int i = 0; i < points; ++i) curve[i] = {grid[i], E[i][j], true};

        struct Candidate {
            real omega, energy;
        };
        std::vector<Candidate> candidates;
        for (int i = 0; i + 1 < points; ++i) {
            if (!(d[i][j] * d[i + 1][j] < 0)) continue;
            real a = grid[i], b = grid[i + 1];
            real da = d[i][j];
            while (b - a > kGoldenRelTol * (a + b) / 2) {
                real mid = (a + b) / 2;
                real dm = deriv_at(mid, j);
                if (dm == 0) {
                    a = b = mid;
                    break;
                }
                if (da * dm < 0) {
                    b = mid;
                } else {
                    a = mid;
                    da = dm;
                }
            }
            const real w = (a + b) / 2;
            candidates.push_back({w, direct_prefix_energies(spec, n, w, j)[j]});
        }

        PmsResult res;
        res.curve = std::move(curve);
        if (candidates.empty()) {
            // Degenerate curve (e.g. mu = 0): take the flattest grid point.
            int flat = 0;
            for (int i = 1; i < points; ++i)
                if (abs(d[i][j]) < abs(d[flat][j])) flat = i;
            res.Omega_star = grid[flat];
            res.kind = PmsKind::flattest_point;
            res.energy = {E[flat][j], Estimator::direct, grid[flat], j, 0};
        } else {
            std::size_t pick = 0;
            for (std::size_t k = 1; k < candidates.size(); ++k) {
                const bool better =
                    (j == 1) ? candidates[k].energy < candidates[pick].energy
                             : abs(candidates[k].energy - prev_energy) <
                                   abs(candidates[pick].energy - prev_energy);
                if (better) pick = k;
            }
            res.Omega_star = candidates[pick].omega;
            res.kind = PmsKind::stationary_point;
            res.energy = {candidates[pick].energy, Estimator::direct, candidates[pick].omega, j, 0};
        }
        prev_energy = res.energy.value;
        chain.push_back(std::move(res));
    }
    return chain;
}

PmsResult pms_direct(const OscillatorSpec& spec, int n, int order, const Bracket& bracket,
                     int points) {
    return pms_direct_chain(spec, n, order, bracket, points).back();
}

}  // namespace anho
