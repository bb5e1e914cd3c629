#include "starkdyn/params.hpp"

#include "starkdyn/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace starkdyn {

DriveParams make_drive(const AtomParams& atom, double e0, double omega_L,
                       const PhysicalConstants& constants, std::optional<double> k)
{
    DriveParams drive;
    drive.e0 = e0;
    drive.omega_L = omega_L;
    drive.k = k.value_or(omega_L / constants.c);
    drive.omega_rabi = 2.0 * atom.dipole * e0 / constants.hbar;
    return drive;
}

namespace {

void require(std::vector<std::string>& problems, bool ok, const char* what)
{
    if (!ok)
        problems.emplace_back(what);
}

[[noreturn]] void raise(const std::vector<std::string>& problems)
{
    std::string msg = "invalid parameters:";
    for (const auto& p : problems)
        msg += " " + p + ";";
    throw ParameterError(msg);
}

} // namespace

void validate(const AtomParams& atom, const DriveParams& drive, const InitialCondition& init,
              const PhysicalConstants& constants)
{
    std::vector<std::string> problems;
    require(problems, constants.hbar > 0.0, "hbar must be > 0");
    require(problems, constants.c > 0.0, "c must be > 0");
    require(problems, atom.mass > 0.0, "mass must be > 0");
    require(problems, atom.omega_a > 0.0, "omega_a must be > 0");
    require(problems, atom.dipole > 0.0, "dipole must be > 0");
    require(problems, atom.gamma1 >= 0.0, "gamma1 must be >= 0");
    require(problems, atom.gamma2 >= 0.0, "gamma2 must be >= 0");
    require(problems, drive.e0 >= 0.0, "e0 must be >= 0");
    require(problems, drive.omega_L > 0.0, "omega_L must be > 0");
    require(problems, drive.k > 0.0, "k must be > 0");
    require(problems, std::isfinite(init.p0), "p0 must be finite");

    const double expected = 2.0 * atom.dipole * drive.e0 / constants.hbar;
    require(problems,
            std::abs(drive.omega_rabi - expected) <= 1e-12 * std::max(std::abs(expected), 1e-300),
            "omega_rabi must equal 2 dipole e0 / hbar");
    require(problems, init.state == InitialState::State2,
            "analytic path requires the atom to start in state 2 with unit weight");
    if (!problems.empty())
        raise(problems);
}

void validate(const ReducedParams& p)
{
    std::vector<std::string> problems;
    require(problems, std::isfinite(p.omega_rabi) && p.omega_rabi >= 0.0, "omega_rabi must be >= 0");
    require(problems, std::isfinite(p.gamma1) && p.gamma1 >= 0.0, "gamma1 must be >= 0");
    require(problems, std::isfinite(p.gamma2) && p.gamma2 >= 0.0, "gamma2 must be >= 0");
    require(problems, std::isfinite(p.delta), "delta must be finite");
    require(problems, std::isfinite(p.delta_omega), "delta_omega must be finite");
    require(problems, std::isfinite(p.e_plus), "e_plus must be finite");
    require(problems, std::isfinite(p.omega_L) && p.omega_L > 0.0, "omega_L must be > 0");
    require(problems, std::isfinite(p.hbar_k) && p.hbar_k > 0.0, "hbar_k must be > 0");
    require(problems, std::isfinite(p.p0), "p0 must be finite");
    if (!problems.empty())
        raise(problems);
}

} // namespace starkdyn
