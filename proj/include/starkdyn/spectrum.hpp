#pragma once

#include "starkdyn/params.hpp"

#include <array>
#include <string_view>

namespace starkdyn {

/// Every time-independent quantity of one (atom, drive, p0) configuration.
///
/// Energies carry the unit of hbar (J in SI mode, dimensionless with hbar = 1
/// in reduced mode); rates are angular frequencies.
struct Spectrum
{
    double hbar = 1.0;
    double e_plus = 0.0;      ///< (p0 + hbar k)^2/2m + p0^2/2m
    double e_minus = 0.0;     ///< (p0 + hbar k)^2/2m - p0^2/2m
    double delta_omega = 0.0; ///< omega_a - omega_L
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma_plus = 0.0;  ///< gamma1 + gamma2
    double gamma_minus = 0.0; ///< gamma1 - gamma2
    double omega_rabi = 0.0;
    double omega_L = 0.0;
    double effective_detuning = 0.0; ///< E_-/hbar + delta_omega
    cplx epsilon;
    cplx beta;
    cplx alpha1;
    cplx alpha2;

    double beta_real() const { return beta.real(); }
    double beta_imag() const { return beta.imag(); }
};

Spectrum derive_spectrum(const AtomParams& atom, const DriveParams& drive,
                         const InitialCondition& init,
                         const PhysicalConstants& constants = PhysicalConstants::si());
Spectrum derive_spectrum(const ReducedParams& params);

/// sqrt(epsilon^2 + Omega^2/4) on the principal branch: Re >= 0, and when the
/// real part vanishes, Im >= 0.
cplx complex_beta(cplx epsilon, double omega_rabi);

/// Closed-form magnitudes of Re(beta), Im(beta) written in terms of the
/// effective detuning, gamma_minus and Omega. Cross-check only.
struct BetaComponents
{
    double real;
    double imag;
};
BetaComponents beta_components_closed_form(double effective_detuning, double gamma_minus,
                                           double omega_rabi);

enum class LevelLabel
{
    OnePlus,
    OneMinus,
    TwoPlus,
    TwoMinus,
};

std::string_view to_string(LevelLabel label);

struct StarkLevel
{
    LevelLabel label;
    double energy_real;  ///< hbar Re(omega)
    double energy_imag;  ///< -hbar Im(omega), the damping part of the energy
    double damping_rate; ///< 2 energy_imag / hbar
};

/// The four AC-Stark-split levels hbar (alpha_i +- beta), ordered
/// 1+, 1-, 2+, 2-.
struct StarkLevels
{
    std::array<StarkLevel, 4> levels;
    double splitting; ///< 2 hbar Re(beta), identical for both families

    const StarkLevel& operator[](LevelLabel label) const
    {
        return levels[static_cast<std::size_t>(label)];
    }
};

StarkLevels stark_levels(const Spectrum& spectrum);

double effective_detuning(const Spectrum& spectrum);

/// |delta| <= tol * Omega; when Omega == 0 the reference scale is omega_L.
bool is_resonant(const Spectrum& spectrum, double tol = 1e-9);

} // namespace starkdyn
