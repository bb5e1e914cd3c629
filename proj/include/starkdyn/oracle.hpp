#pragma once

#include "starkdyn/dynamics.hpp"
#include "starkdyn/params.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace starkdyn {

/// The closed two-component system obtained from the momentum-space equations:
/// the drive couples only (p0 + hbar k, state 1) and (p0, state 2).
///
///   i hbar d/dt psi1 = h11 psi1 - (hbar Omega/2) e^{-i wL t} psi2
///   i hbar d/dt psi2 = h22 psi2 - (hbar Omega/2) e^{+i wL t} psi1
///
/// h11 = (p0 + hbar k)^2/2m + hbar wa/2 - i hbar gamma1,
/// h22 = p0^2/2m - hbar wa/2 - i hbar gamma2.
struct LatticeHamiltonian
{
    double hbar = 1.0;
    cplx h11;
    cplx h22;
    double coupling_mag = 0.0; ///< hbar Omega / 2
    double omega_L = 0.0;
    /// Re(h11 - h22)/hbar - omega_L, kept separately because at optical
    /// frequencies forming it from h11 and h22 cancels most of its digits.
    double drive_detuning = 0.0;

    /// Full H(t) at time t, row-major.
    std::array<cplx, 4> at(double t) const;
};

LatticeHamiltonian build_hamiltonian(const AtomParams& atom, const DriveParams& drive,
                                     const InitialCondition& init,
                                     const PhysicalConstants& constants = PhysicalConstants::si());
LatticeHamiltonian build_hamiltonian(const ReducedParams& params);

enum class Frame
{
    /// Common phase e^{-i E+ t/2hbar} factored out; the coupling keeps its
    /// explicit e^{-+i wL t} time dependence.
    CommonPhase,
    /// Additionally co-rotating with the drive; the system becomes
    /// time-independent. Needed at optical frequencies.
    CoRotating,
};

struct IntegratorOptions
{
    Frame frame = Frame::CommonPhase;
    /// Forced step size. Must not exceed stability_bound().
    std::optional<double> step;
    /// Target for the a-priori global error estimate when choosing the step.
    double error_target = 1e-11;
    std::size_t max_steps = 200'000'000;
};

struct OracleResult
{
    std::vector<double> times;
    /// Amplitudes in the drive frame (same convention as frame_amplitudes()).
    std::vector<std::array<cplx, 2>> psi;
    std::size_t step_count = 0;
    double max_step_error_estimate = 0.0;
    double step = 0.0;
};

/// min(2 pi/omega_rel, 1/gamma+, 1/Omega) / 200 for the chosen frame.
double stability_bound(const LatticeHamiltonian& h, Frame frame);

/// Fixed-step classical RK4 from times[0] = 0 through every grid point.
/// Throws StepSizeError for a forced step above the stability bound or when
/// the step budget is exceeded, ParameterError for a bad grid.
OracleResult integrate(const LatticeHamiltonian& h, std::array<cplx, 2> initial,
                       std::span<const double> times, const IntegratorOptions& options = {});

struct ComparisonReport
{
    double max_amplitude_error = 0.0;
    double max_probability_error = 0.0;
    std::optional<double> first_divergence_time;
    bool pass = false;
};

/// Element-wise comparison on identical grids. PASS iff the amplitude error
/// is below `threshold`; the first grid time exceeding it is reported.
ComparisonReport compare(const Trajectory& analytic, const OracleResult& oracle,
                         double threshold = 1e-8);

} // namespace starkdyn
