#include "starkdyn/dressed.hpp"

#include "starkdyn/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace starkdyn {

namespace {

using Vec2 = std::array<cplx, 2>;

Vec2 normalized(const Vec2& v)
{
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / n, v[1] / n};
}

double norm_sq(const Vec2& v) { return std::norm(v[0]) + std::norm(v[1]); }

// Of two proportional eigenvector candidates, keep the better conditioned.
Vec2 pick(const Vec2& a, const Vec2& b) { return normalized(norm_sq(a) >= norm_sq(b) ? a : b); }

double fold_phase(double theta)
{
    constexpr double pi = std::numbers::pi;
    while (theta > 0.5 * pi)
        theta -= pi;
    while (theta <= -0.5 * pi)
        theta += pi;
    return theta;
}

double lifetime(double rate, double gamma_plus)
{
    if (rate <= 4.0 * std::numeric_limits<double>::epsilon() * gamma_plus)
        return std::numeric_limits<double>::infinity();
    return 1.0 / rate;
}

} // namespace

DressedVectors dressed_vectors(const Spectrum& s)
{
    const cplx eps = s.epsilon;
    const cplx beta = s.beta;
    const double half = 0.5 * s.omega_rabi;

    if (half == 0.0) {
        // Bare states; the +beta mode is state 1 iff beta = -eps.
        const Vec2 one{cplx{1.0}, cplx{0.0}};
        const Vec2 two{cplx{0.0}, cplx{1.0}};
        if (std::abs(eps + beta) <= std::abs(eps - beta))
            return {one, two};
        return {two, one};
    }

    if (std::abs(beta) <= 1e-12 * (std::abs(eps) + half))
        throw DegenerateBasis("beta = 0: the two dressed states coincide");

    // Drive-frame generator relative to alpha1: [[-eps, -W/2], [-W/2, eps]].
    const Vec2 minus = pick(Vec2{-half, eps + beta}, Vec2{eps - beta, half});
    const Vec2 plus = pick(Vec2{half, beta - eps}, Vec2{eps + beta, half});
    return {minus, plus};
}

DressedBasis dressed_basis(const Spectrum& s)
{
    if (!(s.omega_rabi > 0.0))
        throw ParameterError("dressed basis requires Omega > 0");

    const DressedVectors v = dressed_vectors(s);
    DressedBasis b;
    b.vectors = v;
    b.theta_minus_mix = std::atan2(std::abs(v.minus[1]), std::abs(v.minus[0]));
    b.theta_plus_mix = std::atan2(std::abs(v.plus[1]), std::abs(v.plus[0]));
    b.phase_minus = fold_phase(std::arg(v.minus[0] / v.minus[1]));
    b.phase_plus = fold_phase(std::arg(v.plus[0] / v.plus[1]));

    // a1 phi_minus + a2 phi_plus = (0, 1)
    const cplx det = v.minus[0] * v.plus[1] - v.plus[0] * v.minus[1];
    b.a1 = -v.plus[0] / det;
    b.a2 = v.minus[0] / det;
    return b;
}

double verify_diagonalization(const Spectrum& s, const LatticeHamiltonian& lattice,
                              std::span<const double> t_samples)
{
    const DressedVectors v = dressed_vectors(s);
    const double hbar = s.hbar;
    const double scale =
        std::max(hbar * (s.omega_rabi + s.gamma_plus + std::abs(s.effective_detuning)),
                 std::numeric_limits<double>::min());
    const double br = s.beta.real();
    const double bi = s.beta.imag();
    const double offset = s.e_plus / (2.0 * hbar);
    const double half_wl = 0.5 * s.omega_L;

    struct Branch
    {
        const Vec2* vec;
        double energy; // E+/2hbar -+ beta_R
        double decay;  // gamma+/2 -+ beta_I
    };
    const Branch branches[2] = {
        {&v.minus, offset + br, 0.5 * s.gamma_plus - bi},
        {&v.plus, offset - br, 0.5 * s.gamma_plus + bi},
    };

    double worst = 0.0;
    for (const double t : t_samples) {
        const auto H = lattice.at(t);
        for (const auto& br_ : branches) {
            const cplx nu1(br_.energy + half_wl, -br_.decay);
            const cplx nu2(br_.energy - half_wl, -br_.decay);
            const Vec2 vt{(*br_.vec)[0] * std::exp(cplx(0.0, -1.0) * nu1 * t),
                          (*br_.vec)[1] * std::exp(cplx(0.0, -1.0) * nu2 * t)};
            // i hbar dv/dt = hbar nu v for each component.
            const cplx r1 = hbar * nu1 * vt[0] - (H[0] * vt[0] + H[1] * vt[1]);
            const cplx r2 = hbar * nu2 * vt[1] - (H[2] * vt[0] + H[3] * vt[1]);
            const double size = std::sqrt(norm_sq(vt));
            if (size == 0.0)
                continue;
            worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)) / (scale * size));
        }
    }
    return worst;
}

DressedLevels dressed_levels(const Spectrum& s)
{
    DressedLevels d;
    const double half = 0.5 * s.e_plus;
    d.energy_minus = half + s.hbar * s.beta.real();
    d.energy_plus = half - s.hbar * s.beta.real();
    d.rate_minus = s.gamma_plus - 2.0 * s.beta.imag();
    d.rate_plus = s.gamma_plus + 2.0 * s.beta.imag();
    d.lifetime_minus = lifetime(d.rate_minus, s.gamma_plus);
    d.lifetime_plus = lifetime(d.rate_plus, s.gamma_plus);
    return d;
}

DriveDesign design_long_lived_drive(const AtomParams& atom, double requested_omega_rabi,
                                    const PhysicalConstants& constants, std::optional<double> p0)
{
    if (!(atom.mass > 0.0) || !(atom.omega_a > 0.0) || !(atom.dipole > 0.0) ||
        atom.gamma1 < 0.0 || atom.gamma2 < 0.0)
        throw ParameterError("invalid atom parameters");
    const double gp = atom.gamma1 + atom.gamma2;
    const double gm = atom.gamma1 - atom.gamma2;
    if (!(gm > 0.0))
        throw ParameterError("lifetime elongation needs gamma1 > gamma2");
    if (!(requested_omega_rabi >= 0.0))
        throw ParameterError("requested Omega must be >= 0");
    if (requested_omega_rabi >= gm)
        throw WeakCouplingViolation("requested Omega must be below gamma1 - gamma2 (weak coupling)");

    DriveDesign d;
    d.e0_max = constants.hbar * gm / (2.0 * atom.dipole);
    d.e0 = constants.hbar * requested_omega_rabi / (2.0 * atom.dipole);
    d.tau_minus_achievable =
        1.0 / (gp - std::sqrt((gm - requested_omega_rabi) * (gm + requested_omega_rabi)));

    d.omega_L = atom.omega_a;
    if (p0) {
        // omega = omega_a + hbar omega^2/(2 m c^2) + p0 omega/(m c), the root
        // next to omega_a, in the cancellation-free form.
        const double mc = atom.mass * constants.c;
        const double a = constants.hbar / (2.0 * mc * constants.c);
        const double b = *p0 / mc - 1.0;
        const double disc = b * b - 4.0 * a * atom.omega_a;
        if (disc < 0.0)
            throw ParameterError("no drive frequency cancels the recoil and Doppler shift");
        d.omega_L = 2.0 * atom.omega_a / (-b + std::sqrt(disc));
    }
    return d;
}

} // namespace starkdyn
