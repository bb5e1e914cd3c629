#pragma once

#include <array>
#include <complex>
#include <optional>

namespace starkdyn {

using cplx = std::complex<double>;

struct PhysicalConstants
{
    double hbar; ///< J s
    double c;    ///< m/s

    /// CODATA 2018 exact-by-definition values.
    static constexpr PhysicalConstants si() { return {1.054571817e-34, 299792458.0}; }
};

/// Intrinsic constants of the two-level atom (SI units).
struct AtomParams
{
    double mass = 0.0;    ///< kg
    double omega_a = 0.0; ///< transition angular frequency, rad/s
    double dipole = 0.0;  ///< C m
    double gamma1 = 0.0;  ///< damping rate of the upper state, 1/s
    double gamma2 = 0.0;  ///< damping rate of the lower state, 1/s
};

/// Circularly polarized drive. omega_rabi is derived, see make_drive().
struct DriveParams
{
    double e0 = 0.0;         ///< V/m
    double omega_L = 0.0;    ///< rad/s
    double k = 0.0;          ///< 1/m
    double omega_rabi = 0.0; ///< 2 D E0 / hbar, rad/s
};

/// Builds a drive with Omega = 2 D E0 / hbar and k = omega_L / c unless a
/// wave number is given explicitly.
DriveParams make_drive(const AtomParams& atom, double e0, double omega_L,
                       const PhysicalConstants& constants = PhysicalConstants::si(),
                       std::optional<double> k = std::nullopt);

enum class InitialState
{
    State2,             ///< lower state with unit weight; the only analytic case
    ArbitraryTwoVector, ///< oracle only
};

struct InitialCondition
{
    double p0 = 0.0; ///< kg m/s
    InitialState state = InitialState::State2;
    std::array<cplx, 2> amplitudes{cplx{0.0}, cplx{1.0}};
};

/// Dimensionless parameterization with hbar = 1. All rates are in units of a
/// common reference frequency, momenta in units where hbar k is given.
struct ReducedParams
{
    double omega_rabi = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double delta = 0.0;       ///< effective detuning E_-/hbar + (omega_a - omega_L)
    double delta_omega = 0.0; ///< bare detuning omega_a - omega_L
    double e_plus = 0.0;      ///< E_+/hbar, common energy offset
    double omega_L = 10.0;
    double hbar_k = 1.0;
    double p0 = 0.0;
};

/// Throws ParameterError listing every violated invariant.
void validate(const AtomParams& atom, const DriveParams& drive, const InitialCondition& init,
              const PhysicalConstants& constants);
void validate(const ReducedParams& params);

} // namespace starkdyn
