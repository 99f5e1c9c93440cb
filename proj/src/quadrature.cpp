#include "anho/quadrature.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace anho {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<real, real> legendre_and_derivative(int n, const real& x) {
    real p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
        real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    real dp = n * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
}

std::vector<std::pair<real, real>> compute_gauss_legendre(int n) {
    std::vector<std::pair<real, real>> out(n);
    const real kPi = pi();
    for (int i = 0; i < n; ++i) {
        // Chebyshev-angle initial guess, then Newton to full precision.
        real x = cos(kPi * (i + real("0.75")) / (n + real("0.5")));
        for (int it = 0; it < 200; ++it) {
            auto [p, dp] = legendre_and_derivative(n, x);
            real dx = p / dp;
            x -= dx;
            if (abs(dx) <= abs(x) * real("1e-48") + real("1e-60")) break;
        }
        auto [p, dp] = legendre_and_derivative(n, x);
        (void)p;
        out[i] = {x, 2 / ((1 - x * x) * dp * dp)};
    }
    return out;
}

}  // namespace

const std::vector<std::pair<real, real>>& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, std::vector<std::pair<real, real>>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

real truncation_point(const ScaledCouplings& c, int N, const QuadratureSettings& settings) {
    auto f = [&](const real& x) {
        return 2 * (c.gamma * pow_int(x, N + 1) + c.beta * x * x) - settings.truncation_log;
    };
    real hi = 1;
    while (f(hi) < 0) hi *= 2;
    real lo = 0;
    for (int i = 0; i < 300; ++i) {
        real mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return hi;
}

real weighted_integral(const std::function<real(const real&)>& f,
                       const QuadratureSettings& settings, const real& upper) {
    if (!(upper > 0)) throw std::invalid_argument("weighted_integral: upper limit must be > 0");
    auto wrapped = [&f](const real& x, detail::VecK<1>& out) { out[0] = f(x); };
    auto res = integrate_adaptive<1>(wrapped, real(0), upper, settings);
    if (!res.converged) {
        std::ostringstream msg;
        msg << "weighted_integral: no convergence within " << settings.max_panels
            << " panels; best estimate " << res.value[0].str(17)
            << " with error bound " << res.error_bound.str(4);
        throw QuadratureError(msg.str(), to_double(res.value[0]), to_double(res.error_bound));
    }
    return res.value[0];
}

real weighted_integral(const std::function<real(const real&)>& f,
                       const QuadratureSettings& settings, const ScaledCouplings& c, int N) {
    return weighted_integral(f, settings, truncation_point(c, N, settings));
}

}  // namespace anho
