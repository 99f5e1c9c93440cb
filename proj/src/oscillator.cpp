#include "anho/oscillator.hpp"

#include <stdexcept>

namespace anho {

real OscillatorSpec::anharmonic_frequency() const {
    if (mu == 0) return 0;
    using boost::multiprecision::pow;
    return pow(mu * pow_int(hbar, N - 1) / pow_int(mass, N), real(1) / (N + 1));
}

real OscillatorSpec::frequency_scale() const {
    real w = anharmonic_frequency();
    return omega > w ? omega : w;
}

void OscillatorSpec::validate() const {
    if (!(mass > 0)) throw std::invalid_argument("OscillatorSpec: mass must be > 0");
    if (!(omega >= 0)) throw std::invalid_argument("OscillatorSpec: omega must be >= 0");
    if (!(mu >= 0)) throw std::invalid_argument("OscillatorSpec: mu must be >= 0");
    if (!(hbar > 0)) throw std::invalid_argument("OscillatorSpec: hbar must be > 0");
    if (N < 2) throw std::invalid_argument("OscillatorSpec: N must be >= 2");
    if (omega == 0 && mu == 0)
        throw std::invalid_argument("OscillatorSpec: potential must be confining (omega or mu nonzero)");
}

real gamma_of(const OscillatorSpec& spec) {
    spec.validate();
    return sqrt(spec.mu * spec.mass / spec.N) / ((spec.N + 1) * spec.hbar);
}

ScaledCouplings scaled_couplings(const OscillatorSpec& spec, const real& Omega) {
    spec.validate();
    if (!(Omega > 0)) throw std::invalid_argument("scaled_couplings: Omega must be > 0");
    ScaledCouplings c;
    c.Omega = Omega;
    c.Omega_tilde = sqrt(spec.omega * spec.omega + Omega * Omega);
    c.beta = spec.mass * c.Omega_tilde / (2 * spec.hbar);
    c.gamma = gamma_of(spec);
    c.r = Omega * Omega / (spec.omega * spec.omega + Omega * Omega);
    c.u_scale = sqrt(spec.mass * c.Omega_tilde / spec.hbar);
    c.g = sqrt(spec.mu * spec.mass / spec.N) / (spec.hbar * pow_int(c.u_scale, spec.N + 1));
    return c;
}

}  // namespace anho
