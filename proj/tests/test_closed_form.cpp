#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starkdyn/closed_form.hpp"
#include "starkdyn/dynamics.hpp"
#include "starkdyn/rng.hpp"

#include <cmath>

using namespace starkdyn;

namespace {

Spectrum reduced(double omega, double g1, double g2, double delta)
{
    ReducedParams p;
    p.omega_rabi = omega;
    p.gamma1 = g1;
    p.gamma2 = g2;
    p.delta = delta;
    return derive_spectrum(p);
}

} // namespace

TEST_CASE("rho1 prefactor needs Omega squared")
{
    SplitMix64 rng(21);
    std::size_t printed_off = 0;
    std::size_t draws_with_omega_off_one = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = reduced(rng.uniform(0.1, 5), rng.uniform(0, 2), rng.uniform(0, 2),
                               rng.uniform(-5, 5));
        const double t = rng.uniform(0.1, 10);
        const double exact = probabilities(s, t).rho1;
        CHECK(std::abs(closed_form::rho1(s, t) - exact) < 1e-12);
        if (std::abs(s.omega_rabi - 1.0) > 1e-3) {
            ++draws_with_omega_off_one;
            const double printed = closed_form::printed_rho1(s, t);
            // printed = exact / Omega
            CHECK(printed * s.omega_rabi == doctest::Approx(exact).epsilon(1e-12));
            if (std::abs(printed - exact) > 1e-6 * exact)
                ++printed_off;
        }
    }
    CHECK(printed_off == draws_with_omega_off_one);

    // At Omega = 1 the two prefactors coincide.
    const auto one = reduced(1.0, 0.3, 0.1, 0.4);
    CHECK(closed_form::printed_rho1(one, 2.0) == doctest::Approx(closed_form::rho1(one, 2.0)));
}

TEST_CASE("general rho2 form")
{
    SplitMix64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const auto s = reduced(rng.uniform(0.1, 5), rng.uniform(0.05, 2), rng.uniform(0, 2),
                               rng.uniform(-5, 5));
        const double t = rng.uniform(0.1, 10);
        const double exact = probabilities(s, t).rho2;
        CHECK(std::abs(closed_form::rho2(s, t) - exact) < 1e-12);

        // The published sin coefficient differs whenever the term is present.
        const double coeff = s.gamma_minus * s.beta.real() + s.effective_detuning * s.beta.imag();
        if (std::abs(coeff) > 1e-3) {
            double dev = 0.0;
            for (double u = 0.05; u < 3.0; u += 0.05)
                dev = std::max(dev, std::abs(closed_form::printed_rho2(s, u) -
                                             probabilities(s, u).rho2));
            CHECK(dev > 1e-6);
        }
    }
    // Undamped and on resonance the disputed term vanishes.
    const auto clean = reduced(1.4, 0, 0, 0);
    CHECK(closed_form::printed_rho2(clean, 1.1) == doctest::Approx(closed_form::rho2(clean, 1.1)));
}

TEST_CASE("printed resonance rho2 forms deviate from the exact ones")
{
    const auto strong = reduced(1.0, 0.2, 0.0, 0.0);
    const auto weak = reduced(0.5, 1.2, 0.0, 0.0);
    double strong_dev = 0.0;
    double weak_dev = 0.0;
    bool weak_negative = false;
    for (double t = 0.1; t < 30.0; t += 0.1) {
        strong_dev = std::max(strong_dev, std::abs(closed_form::printed_resonance_rho2_strong(strong, t) -
                                                   probabilities(strong, t).rho2));
        const double pw = closed_form::printed_resonance_rho2_weak(weak, t);
        weak_dev = std::max(weak_dev, std::abs(pw - probabilities(weak, t).rho2));
        weak_negative = weak_negative || pw < 0.0;
    }
    CHECK(strong_dev > 1e-3);
    CHECK(weak_dev > 1e-3);
    CHECK(weak_negative);
    // Both printed forms still start at 1.
    CHECK(closed_form::printed_resonance_rho2_strong(strong, 0.0) == doctest::Approx(1.0));
    CHECK(closed_form::printed_resonance_rho2_weak(weak, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("resonant momentum transfer")
{
    for (const auto& s : {reduced(1.0, 0.2, 0.0, 0.0), reduced(0.5, 1.2, 0.0, 0.0)}) {
        for (double p0 : {0.0, -0.5, 1.5}) {
            double printed_dev = 0.0;
            for (double t = 0.05; t < 20.0; t += 0.05) {
                const double exact = momentum_transfer(s, t, 1.0, p0).dp;
                CHECK(std::abs(closed_form::resonant_momentum_transfer(s, t, 1.0, p0) - exact) <
                      1e-10 * std::max(1.0, std::abs(exact)));
                printed_dev = std::max(
                    printed_dev,
                    std::abs(closed_form::printed_resonant_momentum_transfer(s, t, 1.0, p0) - exact));
            }
            // The published p0 terms only matter when p0 != 0.
            if (p0 != 0.0)
                CHECK(printed_dev > 1e-3);
            else
                CHECK(printed_dev < 1e-10);
        }
    }
}
