#pragma once

#include "anho/real.hpp"

namespace anho {

/// Physical problem definition: V(x) = mass*omega^2 x^2/2 + mu/(2N) x^(2N).
struct OscillatorSpec {
    real mass = real("0.5");
    real omega = 2;
    real mu = 8;
    int N = 2;  // half the anharmonic power: quartic 2, sextic 3, octic 4
    real hbar = 1;

    real potential(const real& x) const {
        return mass * omega * omega * x * x / 2 + mu / (2 * N) * pow_int(x, 2 * N);
    }

    /// Dimensional-analysis frequency of the pure anharmonic term,
    /// (mu hbar^(N-1) / mass^N)^(1/(N+1)); reduces to omega for N = 1 with
    /// mu = m omega^2. Zero when mu = 0.
    real anharmonic_frequency() const;

    /// Characteristic frequency max(omega, anharmonic_frequency()).
    real frequency_scale() const;

    /// Throws std::invalid_argument on out-of-domain parameters.
    void validate() const;
};

/// Decay exponent of the asymptotic factor e^{-gamma |x|^(N+1)}:
/// gamma = sqrt(mu*mass/N) / ((N+1)*hbar).
real gamma_of(const OscillatorSpec& spec);

/// Quantities derived from the variational parameter Omega. In the scaled
/// coordinate u = u_scale*x the rearranged equation reads
///   xi'' - 2u xi' + (eps - 1) xi = delta { 2g u^N xi' - r u^2 xi
///                                          - g u^(N-1) (2u^2 - N) xi }
/// with eps = 2E/(hbar*Omega_tilde), so all physics sits in (g, r).
struct ScaledCouplings {
    real Omega;        // variational parameter, > 0
    real Omega_tilde;  // sqrt(omega^2 + Omega^2)
    real beta;         // mass*Omega_tilde/(2 hbar), Gaussian exponent
    real gamma;        // asymptotic exponent, see gamma_of
    real g;            // anharmonic strength in u: sqrt(mu*mass/N)/(hbar*u_scale^(N+1))
    real r;            // Omega^2/Omega_tilde^2, quadratic counterterm strength
    real u_scale;      // sqrt(mass*Omega_tilde/hbar)
};

/// Throws std::invalid_argument when Omega <= 0.
ScaledCouplings scaled_couplings(const OscillatorSpec& spec, const real& Omega);

}  // namespace anho
