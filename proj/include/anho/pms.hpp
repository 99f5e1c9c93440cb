#pragma once

#include "anho/observables.hpp"

#include <optional>
#include <vector>

namespace anho {

/// Omega search interval. Default-constructed brackets are "auto": the
/// default interval [0.05, 20] * frequency_scale(spec), with automatic
/// widening when the scan minimum lands on an edge. Explicit brackets are
/// strict: an edge minimum is an error asking for a wider scan.
struct Bracket {
    std::optional<std::pair<real, real>> range;  // nullopt = auto
    static Bracket automatic() { return {}; }
    static Bracket between(const real& lo, const real& hi) { return {std::pair{lo, hi}}; }
    bool is_auto() const { return !range.has_value(); }
};

std::pair<real, real> default_bracket(const OscillatorSpec& spec);

struct OmegaSample {
    real omega;
    real energy;
    bool ok = true;
};
using OmegaCurve = std::vector<OmegaSample>;

enum class PmsKind { stationary_point, minimum, flattest_point };
const char* to_string(PmsKind k);

struct PmsResult {
    real Omega_star;
    EnergyEstimate energy;
    OmegaCurve curve;
    PmsKind kind = PmsKind::minimum;
};

/// Uniform-grid evaluation of the chosen estimator; failed points are kept
/// in the curve with ok = false. Requires 0 < lo < hi and points >= 16.
OmegaCurve scan_omega(const OscillatorSpec& spec, int n, int order, Estimator estimator,
                      const real& lo, const real& hi, int points,
                      const QuadratureSettings& settings = {});

/// Minimum of the Rayleigh-quotient energy over Omega: grid scan plus
/// golden-section refinement to relative Omega precision 1e-8.
PmsResult pms_variational(const OscillatorSpec& spec, int n, int order,
                          const Bracket& bracket = Bracket::automatic(),
                          const QuadratureSettings& settings = {}, int points = 33);

/// Stationary point of the truncated-series energy, located by sign changes
/// of a central-difference derivative (relative step 1e-5) and refined by
/// bisection. Among several stationary points the one continuing the
/// previous order's energy is kept (lowest energy at order 1). With no sign
/// change anywhere the flattest grid point is returned instead.
PmsResult pms_direct(const OscillatorSpec& spec, int n, int order,
                     const Bracket& bracket = Bracket::automatic(), int points = 33);

/// The whole continuity chain 1..order behind pms_direct; element j-1 is the
/// order-j result.
std::vector<PmsResult> pms_direct_chain(const OscillatorSpec& spec, int n, int order,
                                        const Bracket& bracket = Bracket::automatic(),
                                        int points = 33);

}  // namespace anho
