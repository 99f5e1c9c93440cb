#include "anho/observables.hpp"

#include <sstream>
#include <stdexcept>

namespace anho {

const char* to_string(Estimator e) {
    return e == Estimator::direct ? "direct" : "variational";
}

Estimator estimator_from_string(const std::string& s) {
    if (s == "direct") return Estimator::direct;
    if (s == "variational") return Estimator::variational;
    throw std::invalid_argument("unknown estimator '" + s + "' (expected direct|variational)");
}

EnergyEstimate energy_variational(const ExpansionSolution& sol, const QuadratureSettings& settings) {
    const auto& spec = sol.spec;
    const auto& c = sol.couplings;
    const int N = spec.N;
    const HermiteCoeffs& xs = sol.xi_sum();
    const HermiteCoeffs xsd = xs.derivative();
    const real kin_factor = spec.hbar * spec.hbar / (2 * spec.mass);

    // One pass for numerator and denominator: both share the weight
    // e^{-2(gamma x^(N+1) + beta x^2)} and the Clenshaw evaluations of xi.
    auto f = [&](const real& x, detail::VecK<2>& out) {
        const real u = c.u_scale * x;
        const real xv = xs(u);
        const real xdv = xsd(u);
        const real A = c.gamma * pow_int(x, N + 1) + c.beta * x * x;
        const real Ap = c.gamma * (N + 1) * pow_int(x, N) + 2 * c.beta * x;
        const real w = exp(-2 * A);
        const real dpsi = c.u_scale * xdv - Ap * xv;  // psi'/e^{-A}
        out[0] = w * (kin_factor * dpsi * dpsi + spec.potential(x) * xv * xv);
        out[1] = w * xv * xv;
    };

    const real X = truncation_point(c, N, settings);
    auto res = integrate_adaptive<2>(f, real(0), X, settings);
    if (!res.converged) {
        std::ostringstream msg;
        msg << "energy_variational: quadrature did not converge within "
            << settings.max_panels << " panels";
        throw QuadratureError(msg.str(), to_double(res.value[0] / res.value[1]),
                              to_double(res.error_bound));
    }
    if (!(res.value[1] > 0))
        throw SolverError("energy_variational: nonpositive norm");

    EnergyEstimate est;
    est.value = res.value[0] / res.value[1];
    est.estimator = Estimator::variational;
    est.Omega = c.Omega;
    est.order = sol.order_m;
    est.norm = res.value[1];
    return est;
}

real error_metric(const real& approx, const real& reference) {
    if (reference == 0) throw std::invalid_argument("error_metric: reference must be nonzero");
    return 100 * abs(approx - reference) / abs(reference);
}

}  // namespace anho
