#pragma once

#include "anho/errors.hpp"
#include "anho/oscillator.hpp"
#include "anho/real.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace anho {

struct QuadratureSettings {
    real rel_tol = real("1e-13");
    real abs_tol = real("1e-30");
    /// Integrate on [0, X] where 2*gamma*X^(N+1) + 2*beta*X^2 = truncation_log
    /// (squared ansatz weight down to e^{-truncation_log}).
    real truncation_log = 200;
    int max_panels = 4096;
};

/// Gauss-Legendre nodes/weights on [-1, 1] at full working precision,
/// computed once per order by Newton iteration and cached.
const std::vector<std::pair<real, real>>& gauss_legendre(int order);

namespace detail {

template <std::size_t K>
using VecK = std::array<real, K>;

template <std::size_t K>
VecK<K> gauss_panel(const std::function<void(const real&, VecK<K>&)>& f, const real& a,
                    const real& b, int order) {
    const auto& nodes = gauss_legendre(order);
    const real half = (b - a) / 2, mid = (a + b) / 2;
    VecK<K> sum{};
    VecK<K> fx{};
    for (const auto& [x, w] : nodes) {
        f(mid + half * x, fx);
        for (std::size_t i = 0; i < K; ++i) sum[i] += w * fx[i];
    }
    for (std::size_t i = 0; i < K; ++i) sum[i] *= half;
    return sum;
}

}  // namespace detail

template <std::size_t K>
struct IntegralResult {
    std::array<real, K> value{};
    real error_bound = 0;
    long evaluations = 0;
    bool converged = false;
};

/// Globally adaptive bisection integrator for a K-component integrand on
/// [a, b]: a panel is accepted when replacing its Gauss value by the sum of
/// its halves changes no component by more than its share of the tolerance.
template <std::size_t K>
IntegralResult<K> integrate_adaptive(const std::function<void(const real&, detail::VecK<K>&)>& f,
                                     const real& a, const real& b,
                                     const QuadratureSettings& settings,
                                     int gauss_order = 24, int seed_panels = 8) {
    using detail::VecK;
    struct Panel {
        real lo, hi;
        VecK<K> coarse;
    };

    IntegralResult<K> out;
    const real width = b - a;
    if (width == 0) {
        out.converged = true;
        return out;
    }

    auto eval = [&](const real& lo, const real& hi) {
        out.evaluations += gauss_order;
        return detail::gauss_panel<K>(f, lo, hi, gauss_order);
    };

    std::vector<Panel> stack;
    VecK<K> rough{};
    for (int i = 0; i < seed_panels; ++i) {
        Panel p{a + width * i / seed_panels, a + width * (i + 1) / seed_panels, {}};
        p.coarse = eval(p.lo, p.hi);
        for (std::size_t c = 0; c < K; ++c) rough[c] += p.coarse[c];
        stack.push_back(std::move(p));
    }
    real scale = 0;
    for (std::size_t c = 0; c < K; ++c) {
        const real mag = abs(rough[c]);
        if (mag > scale) scale = mag;
    }

    int panels = seed_panels;
    while (!stack.empty()) {
        Panel p = std::move(stack.back());
        stack.pop_back();
        const real mid = (p.lo + p.hi) / 2;
        VecK<K> left = eval(p.lo, mid);
        VecK<K> right = eval(mid, p.hi);
        real diff = 0;
        for (std::size_t c = 0; c < K; ++c) {
            const real d = abs(p.coarse[c] - left[c] - right[c]);
            if (d > diff) diff = d;
        }
        const real share = (p.hi - p.lo) / width;
        const real rel_floor = settings.rel_tol * scale;
        const real tol = (settings.abs_tol > rel_floor ? settings.abs_tol : rel_floor) * share;
        const bool too_narrow = (p.hi - p.lo) <= abs(mid) * real("1e-45");
        if (diff <= tol || too_narrow) {
            for (std::size_t c = 0; c < K; ++c) out.value[c] += left[c] + right[c];
            out.error_bound += diff;
        } else if (panels + 2 > settings.max_panels) {
            // Budget exhausted: flush the unfinished panels into the best
            // estimate and report failure via the result flag.
            for (std::size_t c = 0; c < K; ++c) out.value[c] += left[c] + right[c];
            out.error_bound += diff;
            for (const auto& q : stack) {
                for (std::size_t c = 0; c < K; ++c) out.value[c] += q.coarse[c];
                out.error_bound += abs(q.hi - q.lo) / width * scale;  // crude bound
            }
            out.converged = false;
            return out;
        } else {
            panels += 2;
            stack.push_back(Panel{p.lo, mid, std::move(left)});
            stack.push_back(Panel{mid, p.hi, std::move(right)});
        }
    }
    out.converged = true;
    return out;
}

/// Truncation point X of the weighted half-line integrals:
/// 2*gamma*X^(N+1) + 2*beta*X^2 = settings.truncation_log.
real truncation_point(const ScaledCouplings& c, int N, const QuadratureSettings& settings);

/// Adaptive quadrature of f over [0, upper]; throws QuadratureError with the
/// best estimate and error bound attached when the subdivision budget runs
/// out before the tolerances are met.
real weighted_integral(const std::function<real(const real&)>& f,
                       const QuadratureSettings& settings, const real& upper);

/// Convenience overload: upper limit from truncation_point(c, N, settings).
real weighted_integral(const std::function<real(const real&)>& f,
                       const QuadratureSettings& settings, const ScaledCouplings& c, int N);

}  // namespace anho
