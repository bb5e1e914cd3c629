#include "starkdyn/closed_form.hpp"

#include "starkdyn/errors.hpp"

#include <cmath>

namespace starkdyn::closed_form {

namespace {

struct Terms
{
    double cosh2;
    double sinh2;
    double cos2;
    double sin2;
    double decay;
    double beta_sq;
    double eps_sq;
};

Terms terms(const Spectrum& s, double t)
{
    const double br = s.beta.real();
    const double bi = s.beta.imag();
    return {std::cosh(2.0 * bi * t), std::sinh(2.0 * bi * t), std::cos(2.0 * br * t),
            std::sin(2.0 * br * t),  std::exp(-s.gamma_plus * t), std::norm(s.beta),
            std::norm(s.epsilon)};
}

double rho2_with_sin_coefficient(const Spectrum& s, double t, double sin_scale)
{
    const auto k = terms(s, t);
    const double br = s.beta.real();
    const double bi = s.beta.imag();
    const double d = s.effective_detuning;
    const double gm = s.gamma_minus;
    const double body = (k.eps_sq + k.beta_sq) * k.cosh2 + (gm * bi - d * br) * k.sinh2 +
                        (k.beta_sq - k.eps_sq) * k.cos2 + sin_scale * (gm * br + d * bi) * k.sin2;
    return body / (2.0 * k.beta_sq) * k.decay;
}

void require_resonant_gamma2_zero(const Spectrum& s)
{
    if (s.gamma2 != 0.0)
        throw ParameterError("resonant momentum closed form assumes gamma2 = 0");
    if (!is_resonant(s))
        throw NotResonant("resonant momentum closed form needs a resonant spectrum");
}

} // namespace

double rho1(const Spectrum& s, double t)
{
    const auto k = terms(s, t);
    const double w = s.omega_rabi;
    return w * w / (8.0 * k.beta_sq) * (k.cosh2 - k.cos2) * k.decay;
}

double printed_rho1(const Spectrum& s, double t)
{
    const auto k = terms(s, t);
    return s.omega_rabi / (8.0 * k.beta_sq) * (k.cosh2 - k.cos2) * k.decay;
}

double rho2(const Spectrum& s, double t) { return rho2_with_sin_coefficient(s, t, 1.0); }

double printed_rho2(const Spectrum& s, double t) { return rho2_with_sin_coefficient(s, t, -0.5); }

double printed_resonance_rho2_strong(const Spectrum& s, double t)
{
    const double w2 = s.omega_rabi * s.omega_rabi;
    const double g = s.gamma_minus;
    const double r = std::sqrt(w2 - g * g);
    const double c = std::cos(0.5 * r * t);
    return w2 / (w2 - g * g) *
           (c * c + g * r / (2.0 * w2) * std::sin(r * t) - g * g / w2) *
           std::exp(-s.gamma_plus * t);
}

double printed_resonance_rho2_weak(const Spectrum& s, double t)
{
    const double w2 = s.omega_rabi * s.omega_rabi;
    const double g = s.gamma_minus;
    const double q = std::sqrt(g * g - w2);
    const double c = std::cosh(0.5 * q * t);
    return w2 / (w2 - g * g) *
           (c * c + g * q / (2.0 * w2) * std::sinh(q * t) - g * g / w2) *
           std::exp(-s.gamma_plus * t);
}

double resonant_momentum_transfer(const Spectrum& s, double t, double hbar_k, double p0)
{
    require_resonant_gamma2_zero(s);
    const double w = s.omega_rabi;
    const double g = s.gamma1;
    const double decay = std::exp(-g * t);

    double rho1 = 0.0;
    double excess = 0.0; // rho1 + rho2 = decay (1 + excess)
    if (w > g) {
        const double r = std::sqrt((w - g) * (w + g));
        const double sh = std::sin(0.5 * r * t);
        rho1 = w * w / (r * r) * sh * sh * decay;
        excess = 2.0 * g * g / (r * r) * sh * sh + g / r * std::sin(r * t);
    } else if (w < g) {
        const double q = std::sqrt((g - w) * (g + w));
        const double sh = std::sinh(0.5 * q * t);
        rho1 = w * w / (q * q) * sh * sh * decay;
        excess = 2.0 * g * g / (q * q) * sh * sh + g / q * std::sinh(q * t);
    } else {
        // sin(rt/2)/r -> t/2, sin(rt)/r -> t
        rho1 = w * w * t * t / 4.0 * decay;
        excess = g * g * t * t / 2.0 + g * t;
    }
    return (decay - 1.0) * p0 + hbar_k * rho1 + p0 * decay * excess;
}

double printed_resonant_momentum_transfer(const Spectrum& s, double t, double hbar_k, double p0)
{
    require_resonant_gamma2_zero(s);
    const double w = s.omega_rabi;
    const double g = s.gamma1;
    const double decay = std::exp(-g * t);
    if (w > g) {
        const double r = std::sqrt(w * w - g * g);
        const double sh = std::sin(0.5 * r * t);
        return (decay - 1.0) * p0 + hbar_k * w * w / (r * r) * sh * sh * decay +
               p0 * g * r / (2.0 * w * w) * std::sin(r * t) * decay;
    }
    const double q = std::sqrt(g * g - w * w);
    const double sh = std::sinh(0.5 * q * t);
    return (decay - 1.0) * p0 + hbar_k * w * w / (q * q) * sh * sh * decay +
           p0 * g * q / (2.0 * w * w) * std::sinh(q * t) * decay;
}

} // namespace starkdyn::closed_form
