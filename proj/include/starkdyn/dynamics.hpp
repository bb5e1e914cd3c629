#pragma once

#include "starkdyn/spectrum.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace starkdyn {

/// Coefficients of the momentum modes (p0 + hbar k, state 1) and (p0, state 2)
/// with the delta normalization stripped.
struct AmplitudePair
{
    cplx psi1;
    cplx psi2;
};

/// Exact amplitudes in the lab frame, for an atom starting in state 2.
AmplitudePair amplitudes(const Spectrum& spectrum, double t);

/// Amplitudes in the drive frame: psi1 e^{i(E+/2hbar + wL/2)t} and
/// psi2 e^{i(E+/2hbar - wL/2)t}. Moduli equal those of amplitudes(); the large
/// optical phases are removed analytically rather than numerically.
AmplitudePair frame_amplitudes(const Spectrum& spectrum, double t);

struct Probabilities
{
    double rho1;
    double rho2;
};

Probabilities probabilities(const Spectrum& spectrum, double t);

/// Time derivatives of rho1 and rho2, from term-by-term differentiation of
/// the amplitudes.
Probabilities probability_rates(const Spectrum& spectrum, double t);

enum class Regime
{
    Strong,
    Weak,
    Critical,
    OffResonance,
};

std::string_view to_string(Regime regime);

/// Strong: Omega > |gamma_-|, Weak: Omega < |gamma_-|, Critical when the two
/// agree to 1e-9 Omega. Off-resonant spectra report OffResonance.
Regime coupling_regime(const Spectrum& spectrum, double resonance_tol = 1e-9);

struct ResonanceProbabilities
{
    double rho1;
    double rho2;
    Regime regime;
};

/// Resonance-specialized closed forms (sin/cos, sinh/cosh, or the series at
/// critical coupling). Throws NotResonant when is_resonant() fails.
ResonanceProbabilities resonance_probabilities(const Spectrum& spectrum, double t,
                                               double resonance_tol = 1e-9);

struct MomentumTransfer
{
    double p_avg; ///< (p0 + hbar k) rho1 + p0 rho2
    double dp;    ///< p_avg - p0
};

MomentumTransfer momentum_transfer(const Spectrum& spectrum, double t, double hbar_k, double p0);

/// Ehrenfest force d(dp)/dt, evaluated analytically.
double force(const Spectrum& spectrum, double t, double hbar_k, double p0);

struct Trajectory
{
    std::vector<double> times;
    std::vector<cplx> psi1; ///< drive frame
    std::vector<cplx> psi2; ///< drive frame
    std::vector<double> rho1;
    std::vector<double> rho2;
    std::vector<double> total;
    std::vector<double> dp;
    std::vector<double> force;
    Regime regime = Regime::OffResonance;
};

/// Uniform grid over [0, min(10/gamma+, 20 pi/Omega_eff)] with
/// Omega_eff = max(sqrt|Omega^2 - gamma_-^2|, Omega).
std::vector<double> default_time_grid(const Spectrum& spectrum, std::size_t n_points = 2000);
std::vector<double> uniform_grid(double t_max, std::size_t n_points);

/// Evaluates every observable on the grid. Points are independent, so the
/// result does not depend on the number of jobs.
Trajectory evaluate_trajectory(const Spectrum& spectrum, std::span<const double> times,
                               double hbar_k, double p0, unsigned jobs = 1);

} // namespace starkdyn
