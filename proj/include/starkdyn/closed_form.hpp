#pragma once

// Expanded closed forms of the occupation probabilities and the momentum
// transfer. The library computes observables from the amplitudes; these are
// kept as independent cross-checks. The `printed_*` variants reproduce the
// published expressions verbatim so their discrepancies can be measured.

#include "starkdyn/spectrum.hpp"

namespace starkdyn::closed_form {

/// Omega^2/(8|beta|^2) {cosh(2 beta_I t) - cos(2 beta_R t)} e^{-gamma+ t}
double rho1(const Spectrum& s, double t);

/// Same expression with the published prefactor Omega/(8|beta|^2).
double printed_rho1(const Spectrum& s, double t);

/// General rho2 with the sin(2 beta_R t) coefficient +(gamma_- beta_R + delta beta_I).
double rho2(const Spectrum& s, double t);

/// Published general rho2: sin coefficient -(gamma_- beta_R + delta beta_I)/2.
double printed_rho2(const Spectrum& s, double t);

/// Published resonance forms of rho2 for strong and weak coupling.
double printed_resonance_rho2_strong(const Spectrum& s, double t);
double printed_resonance_rho2_weak(const Spectrum& s, double t);

/// Resonant momentum transfer for an undamped lower state (gamma2 = 0),
/// strong or weak coupling chosen from Omega vs gamma1:
///   dp = (e^{-g t} - 1) p0 + hbar k rho1 + p0 e^{-g t} [2g^2/s^2 sin^2(st/2) + (g/s) sin(st)]
/// and the sinh analogue. Throws ParameterError if gamma2 != 0 or the
/// spectrum is off resonance.
double resonant_momentum_transfer(const Spectrum& s, double t, double hbar_k, double p0);

/// The published strong/weak expressions.
double printed_resonant_momentum_transfer(const Spectrum& s, double t, double hbar_k, double p0);

} // namespace starkdyn::closed_form
