#include "starkdyn/spectrum.hpp"

#include "starkdyn/errors.hpp"

#include <cmath>

namespace starkdyn {

namespace {

Spectrum assemble(double hbar, double e_plus, double e_minus, double delta_omega,
                  double effective_detuning, double gamma1, double gamma2,
                  double omega_rabi, double omega_L)
{
    Spectrum s;
    s.hbar = hbar;
    s.e_plus = e_plus;
    s.e_minus = e_minus;
    s.delta_omega = delta_omega;
    s.effective_detuning = effective_detuning;
    s.gamma1 = gamma1;
    s.gamma2 = gamma2;
    s.gamma_plus = gamma1 + gamma2;
    s.gamma_minus = gamma1 - gamma2;
    s.omega_rabi = omega_rabi;
    s.omega_L = omega_L;

    s.epsilon = -0.5 * cplx(effective_detuning, -s.gamma_minus);
    s.beta = complex_beta(s.epsilon, omega_rabi);

    const double offset = e_plus / hbar;
    s.alpha1 = cplx(0.5 * (offset + omega_L), -0.5 * s.gamma_plus);
    s.alpha2 = cplx(0.5 * (offset - omega_L), -0.5 * s.gamma_plus);
    return s;
}

} // namespace

Spectrum derive_spectrum(const AtomParams& atom, const DriveParams& drive,
                         const InitialCondition& init, const PhysicalConstants& constants)
{
    validate(atom, drive, init, constants);

    const double hbar = constants.hbar;
    const double hk = hbar * drive.k;
    const double p0 = init.p0;
    const double m2 = 2.0 * atom.mass;
    const double e_plus = (p0 + hk) * (p0 + hk) / m2 + p0 * p0 / m2;
    // hk (2 p0 + hk) / 2m avoids cancelling two nearly equal kinetic energies.
    const double e_minus = hk * (2.0 * p0 + hk) / m2;
    const double delta_omega = atom.omega_a - drive.omega_L;

    return assemble(hbar, e_plus, e_minus, delta_omega, e_minus / hbar + delta_omega,
                    atom.gamma1, atom.gamma2, drive.omega_rabi, drive.omega_L);
}

Spectrum derive_spectrum(const ReducedParams& p)
{
    validate(p);
    return assemble(1.0, p.e_plus, p.delta - p.delta_omega, p.delta_omega, p.delta, p.gamma1,
                    p.gamma2, p.omega_rabi, p.omega_L);
}

cplx complex_beta(cplx epsilon, double omega_rabi)
{
    cplx beta = std::sqrt(epsilon * epsilon + 0.25 * omega_rabi * omega_rabi);
    if (beta.real() == 0.0)
        beta = cplx(0.0, std::abs(beta.imag()));
    return beta;
}

BetaComponents beta_components_closed_form(double delta, double gamma_minus, double omega_rabi)
{
    const double a = delta * delta + omega_rabi * omega_rabi - gamma_minus * gamma_minus;
    const double root = std::sqrt(a * a + 4.0 * gamma_minus * gamma_minus * delta * delta);
    const double k = std::sqrt(2.0) / 4.0;
    return {k * std::sqrt(std::max(root + a, 0.0)), k * std::sqrt(std::max(root - a, 0.0))};
}

std::string_view to_string(LevelLabel label)
{
    switch (label) {
    case LevelLabel::OnePlus:
        return "1+";
    case LevelLabel::OneMinus:
        return "1-";
    case LevelLabel::TwoPlus:
        return "2+";
    case LevelLabel::TwoMinus:
        return "2-";
    }
    return "?";
}

StarkLevels stark_levels(const Spectrum& s)
{
    auto level = [&](LevelLabel label, cplx omega) {
        const double imag = -s.hbar * omega.imag();
        return StarkLevel{label, s.hbar * omega.real(), imag, 2.0 * imag / s.hbar};
    };

    StarkLevels out{};
    out.levels = {
        level(LevelLabel::OnePlus, s.alpha1 + s.beta),
        level(LevelLabel::OneMinus, s.alpha1 - s.beta),
        level(LevelLabel::TwoPlus, s.alpha2 + s.beta),
        level(LevelLabel::TwoMinus, s.alpha2 - s.beta),
    };
    out.splitting = 2.0 * s.hbar * s.beta.real();
    return out;
}

double effective_detuning(const Spectrum& s) { return s.effective_detuning; }

bool is_resonant(const Spectrum& s, double tol)
{
    const double scale = s.omega_rabi > 0.0 ? s.omega_rabi : s.omega_L;
    return std::abs(s.effective_detuning) <= tol * scale;
}

} // namespace starkdyn
