#include "starkdyn/dynamics.hpp"

#include "starkdyn/errors.hpp"
#include "starkdyn/parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace starkdyn {

namespace {

constexpr cplx I{0.0, 1.0};

// Below this |beta t| the two exponentials of the exact solution nearly
// cancel; switch to the cos / sin(z)/beta form evaluated by power series.
constexpr double kSeriesThreshold = 0.1;

cplx cos_series(cplx z)
{
    const cplx z2 = z * z;
    return 1.0 - z2 / 2.0 * (1.0 - z2 / 12.0 * (1.0 - z2 / 30.0 * (1.0 - z2 / 56.0 * (1.0 - z2 / 90.0))));
}

cplx sinc_series(cplx z)
{
    const cplx z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0 * (1.0 - z2 / 72.0 * (1.0 - z2 / 110.0))));
}

struct Kernel
{
    AmplitudePair value;
    AmplitudePair rate;
};

// Amplitudes and their time derivatives for a frame in which the i-th
// component carries the bare complex frequency a_i instead of alpha_i.
Kernel evaluate(const Spectrum& s, double t, cplx a1, cplx a2)
{
    const cplx beta = s.beta;
    const cplx eps = s.epsilon;
    const double omega = s.omega_rabi;
    const cplx z = beta * t;

    Kernel k;
    if (std::abs(z) < kSeriesThreshold) {
        const cplx c = cos_series(z);
        const cplx sb = t * sinc_series(z); // sin(beta t) / beta
        const cplx e1 = std::exp(-I * a1 * t);
        const cplx e2 = std::exp(-I * a2 * t);
        const cplx u2 = c - I * eps * sb;
        k.value.psi1 = 0.5 * I * omega * sb * e1;
        k.value.psi2 = u2 * e2;
        k.rate.psi1 = 0.5 * I * omega * (c - I * a1 * sb) * e1;
        k.rate.psi2 = (-beta * beta * sb - I * eps * c - I * a2 * u2) * e2;
        return k;
    }

    const cplx w1p = a1 + beta;
    const cplx w1m = a1 - beta;
    const cplx w2p = a2 + beta;
    const cplx w2m = a2 - beta;
    const cplx e1p = std::exp(-I * w1p * t);
    const cplx e1m = std::exp(-I * w1m * t);
    const cplx e2p = std::exp(-I * w2p * t);
    const cplx e2m = std::exp(-I * w2m * t);

    const cplx k1 = omega / (4.0 * beta);
    const cplx cp = (eps + beta) / (2.0 * beta);
    const cplx cm = (eps - beta) / (2.0 * beta);

    k.value.psi1 = k1 * (-e1p + e1m);
    k.value.psi2 = cp * e2p - cm * e2m;
    k.rate.psi1 = k1 * (I * w1p * e1p - I * w1m * e1m);
    k.rate.psi2 = -I * (cp * w2p * e2p - cm * w2m * e2m);
    return k;
}

cplx frame_shift1(const Spectrum& s) { return 0.5 * (s.e_plus / s.hbar + s.omega_L); }
cplx frame_shift2(const Spectrum& s) { return 0.5 * (s.e_plus / s.hbar - s.omega_L); }

Kernel evaluate_frame(const Spectrum& s, double t)
{
    return evaluate(s, t, s.alpha1 - frame_shift1(s), s.alpha2 - frame_shift2(s));
}

double rate_of(cplx psi, cplx dpsi) { return 2.0 * (std::conj(psi) * dpsi).real(); }

// cos(sqrt(x)) and sin(sqrt(x))/sqrt(x) as power series in x = (beta t)^2.
// Valid for either sign of x; used inside the critical-coupling window.
struct EvenPair
{
    double c;
    double s;
};

EvenPair even_series(double x)
{
    double c = 0.0, sn = 0.0, term_c = 1.0, term_s = 1.0;
    for (int n = 0; n < 12; ++n) {
        c += term_c;
        sn += term_s;
        term_c *= -x / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
        term_s *= -x / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return {c, sn};
}

} // namespace

AmplitudePair amplitudes(const Spectrum& s, double t)
{
    return evaluate(s, t, s.alpha1, s.alpha2).value;
}

AmplitudePair frame_amplitudes(const Spectrum& s, double t) { return evaluate_frame(s, t).value; }

Probabilities probabilities(const Spectrum& s, double t)
{
    const auto a = frame_amplitudes(s, t);
    return {std::norm(a.psi1), std::norm(a.psi2)};
}

Probabilities probability_rates(const Spectrum& s, double t)
{
    const auto k = evaluate_frame(s, t);
    return {rate_of(k.value.psi1, k.rate.psi1), rate_of(k.value.psi2, k.rate.psi2)};
}

std::string_view to_string(Regime regime)
{
    switch (regime) {
    case Regime::Strong:
        return "strong";
    case Regime::Weak:
        return "weak";
    case Regime::Critical:
        return "critical";
    case Regime::OffResonance:
        return "off-resonance";
    }
    return "?";
}

Regime coupling_regime(const Spectrum& s, double resonance_tol)
{
    if (!is_resonant(s, resonance_tol))
        return Regime::OffResonance;
    const double omega = s.omega_rabi;
    const double g = std::abs(s.gamma_minus);
    if (std::abs(omega - g) <= 1e-9 * omega || (omega == 0.0 && g == 0.0))
        return Regime::Critical;
    return omega > g ? Regime::Strong : Regime::Weak;
}

ResonanceProbabilities resonance_probabilities(const Spectrum& s, double t, double resonance_tol)
{
    if (!is_resonant(s, resonance_tol))
        throw NotResonant("effective detuning " + std::to_string(s.effective_detuning) +
                          " is outside the resonance tolerance");

    const double omega = s.omega_rabi;
    const double gm = s.gamma_minus;
    const double g = std::abs(gm);
    const double decay = std::exp(-s.gamma_plus * t);
    const Regime regime = coupling_regime(s, resonance_tol);

    if (regime == Regime::Critical) {
        const double x = (omega - g) * (omega + g) * t * t / 4.0;
        if (std::abs(x) <= 1e-2) {
            const auto [c, sinc] = even_series(x);
            const double r1 = 0.5 * omega * t * sinc;
            const double r2 = c + 0.5 * gm * t * sinc;
            return {r1 * r1 * decay, r2 * r2 * decay, regime};
        }
        // Long times inside the window: the series would need too many terms,
        // and the trigonometric forms are well conditioned again.
    }

    if (omega > g) {
        const double rs = std::sqrt((omega - g) * (omega + g));
        const double half = 0.5 * rs * t;
        const double r1 = omega / rs * std::sin(half);
        const double r2 = std::cos(half) + gm / rs * std::sin(half);
        return {r1 * r1 * decay, r2 * r2 * decay, regime};
    }
    const double q = std::sqrt((g - omega) * (g + omega));
    const double half = 0.5 * q * t;
    const double r1 = omega / q * std::sinh(half);
    const double r2 = std::cosh(half) + gm / q * std::sinh(half);
    return {r1 * r1 * decay, r2 * r2 * decay, regime};
}

MomentumTransfer momentum_transfer(const Spectrum& s, double t, double hbar_k, double p0)
{
    const auto p = probabilities(s, t);
    const double p_avg = (p0 + hbar_k) * p.rho1 + p0 * p.rho2;
    // Written as the sum of two small terms rather than p_avg - p0.
    const double dp = hbar_k * p.rho1 + p0 * (p.rho1 + p.rho2 - 1.0);
    return {p_avg, dp};
}

double force(const Spectrum& s, double t, double hbar_k, double p0)
{
    const auto r = probability_rates(s, t);
    return hbar_k * r.rho1 + p0 * (r.rho1 + r.rho2);
}

std::vector<double> uniform_grid(double t_max, std::size_t n_points)
{
    if (n_points < 2)
        throw ParameterError("time grid needs at least 2 points");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw ParameterError("time grid needs a finite t_max > 0");
    std::vector<double> times(n_points);
    const double n = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
        times[i] = t_max * (static_cast<double>(i) / n);
    return times;
}

std::vector<double> default_time_grid(const Spectrum& s, std::size_t n_points)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double omega = s.omega_rabi;
    const double gm = s.gamma_minus;
    const double omega_eff =
        std::max(std::sqrt(std::abs((omega - gm) * (omega + gm))), omega);
    const double decay_scale = s.gamma_plus > 0.0 ? 10.0 / s.gamma_plus : inf;
    const double rabi_scale = omega_eff > 0.0 ? 20.0 * std::numbers::pi / omega_eff : inf;
    double t_max = std::min(decay_scale, rabi_scale);
    if (!std::isfinite(t_max))
        t_max = 20.0 * std::numbers::pi / s.omega_L;
    return uniform_grid(t_max, n_points);
}

Trajectory evaluate_trajectory(const Spectrum& s, std::span<const double> times, double hbar_k,
                               double p0, unsigned jobs)
{
    const std::size_t n = times.size();
    Trajectory tr;
    tr.times.assign(times.begin(), times.end());
    tr.psi1.resize(n);
    tr.psi2.resize(n);
    tr.rho1.resize(n);
    tr.rho2.resize(n);
    tr.total.resize(n);
    tr.dp.resize(n);
    tr.force.resize(n);
    tr.regime = coupling_regime(s);

    parallel_for(n, jobs, [&](std::size_t i) {
        const double t = times[i];
        const auto k = evaluate_frame(s, t);
        const double r1 = std::norm(k.value.psi1);
        const double r2 = std::norm(k.value.psi2);
        const double d1 = rate_of(k.value.psi1, k.rate.psi1);
        const double d2 = rate_of(k.value.psi2, k.rate.psi2);
        tr.psi1[i] = k.value.psi1;
        tr.psi2[i] = k.value.psi2;
        tr.rho1[i] = r1;
        tr.rho2[i] = r2;
        tr.total[i] = r1 + r2;
        tr.dp[i] = hbar_k * r1 + p0 * (r1 + r2 - 1.0);
        tr.force[i] = hbar_k * d1 + p0 * (d1 + d2);
    });
    return tr;
}

} // namespace starkdyn
