#pragma once

#include "starkdyn/oracle.hpp"
#include "starkdyn/spectrum.hpp"

#include <array>
#include <span>

namespace starkdyn {

/// Dressed vectors at t = 0, unit Euclidean norm. phi_minus is the mode
/// evolving as e^{-i(E+/2hbar + beta)t}, phi_plus as e^{-i(E+/2hbar - beta)t}.
/// The time-dependent states carry e^{-i wL t/2} on the state-1 component and
/// e^{+i wL t/2} on the state-2 component. The vectors are not orthogonal in
/// general: the driven Hamiltonian is not Hermitian.
struct DressedVectors
{
    std::array<cplx, 2> minus;
    std::array<cplx, 2> plus;
};

/// Eigenvectors of the drive-frame generator. Works for Omega = 0 (bare
/// states); throws DegenerateBasis when beta = 0 and the two coincide.
DressedVectors dressed_vectors(const Spectrum& spectrum);

struct DressedBasis
{
    double theta_minus_mix; ///< in [0, pi/2)
    double theta_plus_mix;
    double phase_minus;     ///< in (-pi/2, pi/2]
    double phase_plus;
    cplx a1; ///< weight of phi_minus in the initial state
    cplx a2; ///< weight of phi_plus
    DressedVectors vectors;
};

/// Requires Omega > 0 (ParameterError) and beta != 0 (DegenerateBasis).
///
/// Mixing angles are arctan(Omega / 2|eps -+ beta|); phases are
/// arctan(Im/Re) of eps -+ beta folded into (-pi/2, pi/2]. The quadrant lost
/// by that fold stays in `vectors`, which is what a1 and a2 are solved from.
DressedBasis dressed_basis(const Spectrum& spectrum);

/// Max over samples and both branches of |i hbar dv/dt - H(t) v| for the
/// branch solutions v(t) built from the dressed vectors and the Spectrum,
/// with H(t) taken from `lattice`. Normalized by hbar (Omega + gamma+ + |delta|)
/// and by |v(t)|.
double verify_diagonalization(const Spectrum& spectrum, const LatticeHamiltonian& lattice,
                              std::span<const double> t_samples);

struct DressedLevels
{
    double energy_minus;   ///< E+/2 + hbar beta_R
    double energy_plus;    ///< E+/2 - hbar beta_R
    double lifetime_minus; ///< 1/(gamma+ - 2 beta_I), +inf when the rate vanishes
    double lifetime_plus;  ///< 1/(gamma+ + 2 beta_I)
    double rate_minus;
    double rate_plus;
};

DressedLevels dressed_levels(const Spectrum& spectrum);

struct DriveDesign
{
    double e0_max;               ///< hbar gamma_- / (2 D): weak-coupling boundary
    double e0;                   ///< amplitude giving the requested Omega
    double omega_L;              ///< recommended drive frequency
    double tau_minus_achievable; ///< 1/(gamma+ - sqrt(gamma_-^2 - Omega^2))
};

/// Weak resonant drive that elongates the phi_minus lifetime. With p0 given,
/// omega_L also absorbs the recoil and Doppler shift (k = omega_L/c) so the
/// effective detuning vanishes; otherwise omega_L = omega_a.
/// Throws ParameterError unless gamma_- > 0, WeakCouplingViolation unless
/// requested Omega < gamma_-.
DriveDesign design_long_lived_drive(const AtomParams& atom, double requested_omega_rabi,
                                    const PhysicalConstants& constants = PhysicalConstants::si(),
                                    std::optional<double> p0 = std::nullopt);

} // namespace starkdyn
