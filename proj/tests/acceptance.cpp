// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "starkdyn/closed_form.hpp"
#include "starkdyn/commands.hpp"
#include "starkdyn/dressed.hpp"
#include "starkdyn/dynamics.hpp"
#include "starkdyn/oracle.hpp"
#include "starkdyn/rng.hpp"
#include "starkdyn/parallel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>

using namespace starkdyn;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSeed = 12345;

struct Outcome
{
    bool pass;
    std::string detail;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

ReducedParams params(double omega, double g1, double g2, double delta)
{
    ReducedParams p;
    p.omega_rabi = omega;
    p.gamma1 = g1;
    p.gamma2 = g2;
    p.delta = delta;
    return p;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome oracle_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(kSeed);
    std::vector<ReducedParams> draws;
    for (int i = 0; i < 100; ++i)
        draws.push_back(random_draw(rng));
    std::vector<double> err(draws.size());
    parallel_for(draws.size(), workers(), [&](std::size_t i) {
        const auto grid = uniform_grid(draw_horizon(draws[i]), 201);
        const auto tr = evaluate_trajectory(derive_spectrum(draws[i]), grid, 1.0, 0.0);
        const auto o = integrate(build_hamiltonian(draws[i]), {cplx{0.0}, cplx{1.0}}, grid);
        err[i] = compare(tr, o).max_amplitude_error;
    });
    const double worst = *std::max_element(err.begin(), err.end());
    const double elapsed = seconds_since(t0);
    return {worst < 1e-8 && elapsed < 30.0,
            "max amplitude error " + sci(worst) + " over 100 draws in " + sci(elapsed) + " s"};
}

Outcome undamped_reduction()
{
    double worst_rho = 0, worst_dp = 0, worst_norm = 0;
    for (double omega : {0.3, 1.0, 2.7}) {
        const auto s = derive_spectrum(params(omega, 0, 0, 0));
        for (double t : uniform_grid(60.0, 3001)) {
            const double sn2 = std::pow(std::sin(omega * t / 2), 2);
            const auto p = probabilities(s, t);
            worst_rho = std::max(worst_rho, std::abs(p.rho1 - sn2));
            worst_dp = std::max(worst_dp, std::abs(momentum_transfer(s, t, 1.0, 0.0).dp - sn2));
            worst_norm = std::max(worst_norm, std::abs(p.rho1 + p.rho2 - 1.0));
        }
    }
    return {worst_rho < 1e-10 && worst_dp < 1e-10 && worst_norm < 1e-10,
            "rho1 " + sci(worst_rho) + ", dp " + sci(worst_dp) + ", norm " + sci(worst_norm)};
}

Outcome strong_rabi_structure()
{
    const auto p = params(1.0, 0.2, 0.0, 0.0);
    const auto s = derive_spectrum(p);
    const double period = 2.0 * pi / std::sqrt(0.96);
    const auto grid = uniform_grid(5.5 * period, 2000);
    const double dt = grid[1];
    const auto tr = evaluate_trajectory(s, grid, 1.0, 0.0);

    std::vector<double> zeros;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        if (tr.rho1[i] < tr.rho1[i - 1] && tr.rho1[i] <= tr.rho1[i + 1])
            zeros.push_back(grid[i]);
    bool zeros_ok = zeros.size() == 5;
    double worst_offset = 0.0;
    for (std::size_t n = 1; zeros_ok && n <= 5; ++n) {
        const double off = std::abs(zeros[n - 1] - static_cast<double>(n) * period);
        worst_offset = std::max(worst_offset, off);
        zeros_ok = off <= dt;
    }

    const double t_half = pi / std::sqrt(0.96);
    const double rho = probabilities(s, t_half).rho1;
    const auto o = integrate(build_hamiltonian(p), {cplx{0.0}, cplx{1.0}},
                             std::vector<double>{0.0, t_half});
    const double rho_oracle = std::norm(o.psi[1][0]);
    const bool value_ok = std::abs(rho - 0.5485) <= 1e-4 && std::abs(rho_oracle - 0.5485) <= 1e-4 &&
                          std::abs(rho - rho_oracle) < 1e-8;
    return {zeros_ok && value_ok, std::to_string(zeros.size()) + " zeros, worst offset " +
                                      sci(worst_offset) + " (grid step " + sci(dt) +
                                      "); rho1(pi/sqrt(0.96)) = " + std::to_string(rho) +
                                      ", oracle " + std::to_string(rho_oracle)};
}

Outcome weak_resonance_damping()
{
    const double omega = 0.5, g = 1.2;
    const auto s = derive_spectrum(params(omega, g, 0.0, 0.0));
    const double q = std::sqrt(g * g - omega * omega);
    const auto grid = uniform_grid(40.0, 4001);

    int turns = 0;
    double last = 0.0;
    double worst1 = 0.0, worst2 = 0.0, printed2 = 0.0;
    std::vector<double> rho1;
    for (double t : grid) {
        const auto r = resonance_probabilities(s, t);
        const double env = std::exp(-g * t);
        const double sh = std::sinh(q * t / 2), ch = std::cosh(q * t / 2);
        const double ref1 = omega * omega / (q * q) * sh * sh * env;
        const double ref2 = std::pow(ch + g / q * sh, 2) * env;
        worst1 = std::max(worst1, std::abs(r.rho1 - ref1) / std::max(ref1, 1e-300));
        worst2 = std::max(worst2, std::abs(r.rho2 - ref2) / std::max(ref2, 1e-300));
        const auto p = probabilities(s, t);
        worst1 = std::max(worst1, t > 0 ? std::abs(p.rho1 - ref1) / ref1 : 0.0);
        worst2 = std::max(worst2, std::abs(p.rho2 - ref2) / ref2);
        printed2 = std::max(printed2, std::abs(closed_form::printed_resonance_rho2_weak(s, t) - ref2));
        if (!rho1.empty()) {
            const double d = p.rho1 - rho1.back();
            if (d != 0.0 && last != 0.0 && (d > 0) != (last > 0))
                ++turns;
            if (d != 0.0)
                last = d;
        }
        rho1.push_back(p.rho1);
    }
    const int crossings = turns - 1; // a single rise-then-fall turning point is not an oscillation
    const bool pass = crossings == 0 && worst1 < 1e-10 && worst2 < 1e-10 && printed2 > 1e-3;
    return {pass, "oscillation crossings " + std::to_string(crossings) + ", rel err rho1 " +
                      sci(worst1) + ", rho2 " + sci(worst2) +
                      "; published rho2 form off by " + sci(printed2)};
}

Outcome rho1_prefactor()
{
    SplitMix64 rng(kSeed + 5);
    double worst = 0.0;
    std::size_t off_one = 0, printed_failed = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = derive_spectrum(params(rng.uniform(0.1, 5), rng.uniform(0, 2),
                                              rng.uniform(0, 2), rng.uniform(-5, 5)));
        bool printed_bad = false;
        for (double t : {0.3, 1.7, 4.1, 9.0}) {
            const double exact = std::norm(amplitudes(s, t).psi1);
            worst = std::max(worst, std::abs(closed_form::rho1(s, t) - exact));
            printed_bad = printed_bad ||
                          std::abs(closed_form::printed_rho1(s, t) - exact) > 1e-6 * exact;
        }
        if (std::abs(s.omega_rabi - 1.0) > 1e-3) {
            ++off_one;
            printed_failed += printed_bad ? 1 : 0;
        }
    }
    return {worst < 1e-12 && printed_failed == off_one,
            "corrected form max error " + sci(worst) + "; published form fails " +
                std::to_string(printed_failed) + "/" + std::to_string(off_one) +
                " draws with Omega != 1"};
}

Outcome diagonalization_residual()
{
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(kSeed + 6);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto p = random_draw(rng);
        const auto s = derive_spectrum(p);
        std::vector<double> t(50);
        const double horizon = draw_horizon(p);
        for (std::size_t k = 0; k < t.size(); ++k)
            t[k] = horizon * static_cast<double>(k) / 49.0;
        worst = std::max(worst, verify_diagonalization(s, build_hamiltonian(p), t));
    }
    const double elapsed = seconds_since(t0);
    return {worst < 1e-10 && elapsed < 10.0,
            "max residual " + sci(worst) + " in " + sci(elapsed) + " s"};
}

Outcome dressed_lifetimes()
{
    const auto p = params(0.5, 1.2, 0.0, 0.0);
    const auto s = derive_spectrum(p);
    const auto d = dressed_levels(s);
    const auto v = dressed_vectors(s);
    const auto grid = uniform_grid(3.0 * d.lifetime_plus, 61);
    const auto h = build_hamiltonian(p);

    auto fitted = [&](const std::array<cplx, 2>& init) {
        const auto r = integrate(h, init, grid);
        double st = 0, sy = 0, stt = 0, sty = 0;
        const double n = static_cast<double>(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double ly = std::log(std::norm(r.psi[i][0]) + std::norm(r.psi[i][1]));
            st += grid[i];
            sy += ly;
            stt += grid[i] * grid[i];
            sty += grid[i] * ly;
        }
        return -(n * stt - st * st) / (n * sty - st * sy);
    };
    const double fit_minus = fitted(v.minus);
    const double fit_plus = fitted(v.plus);
    auto rel = [](double a, double b) { return std::abs(a - b) / b; };
    const bool pass = rel(d.lifetime_minus, 9.17) <= 1e-3 && rel(d.lifetime_plus, 0.4365) <= 1e-3 &&
                      rel(fit_minus, d.lifetime_minus) <= 1e-3 &&
                      rel(fit_plus, d.lifetime_plus) <= 1e-3;
    return {pass, "tau- " + std::to_string(d.lifetime_minus) + " (fit " +
                      std::to_string(fit_minus) + "), tau+ " + std::to_string(d.lifetime_plus) +
                      " (fit " + std::to_string(fit_plus) + ")"};
}

Outcome design_numbers()
{
    const auto c = PhysicalConstants::si();
    const AtomParams fast{1e-26, 1e16, 1.6e-29, 1e9, 0.0};
    const AtomParams slow{1e-26, 1e16, 1.6e-29, 1e6, 0.0};
    const double a = design_long_lived_drive(fast, 0.5e9, c).e0_max;
    const double b = design_long_lived_drive(slow, 0.5e6, c).e0_max;
    // The quoted window "1e3 ~ 1 V/m" is a pair of orders of magnitude: the two
    // bounds must sit in the 1e3 and 1e0 decades.
    const bool pass = std::abs(a / 3.3e3 - 1) < 0.01 && std::abs(b / 3.3 - 1) < 0.01 &&
                      std::floor(std::log10(a)) == 3.0 && std::floor(std::log10(b)) == 0.0;
    return {pass, "e0_max " + sci(a) + " V/m (tau1 = 1e-9 s), " + sci(b) + " V/m (tau1 = 1e-6 s)"};
}

Outcome momentum_limits()
{
    const double omega = 1.0, hk = 1.0;
    double worst_slow = 0.0, worst_fast = 0.0;
    bool pass = true;
    for (double p0 : {-0.5 * hk, 0.0}) {
        ReducedParams p = params(omega, 1e-3 * omega, 0.0, 0.0);
        p.hbar_k = hk;
        p.p0 = p0;
        const auto s = derive_spectrum(p);
        double dev = 0.0;
        for (double t : uniform_grid(2.0 * pi / omega, 2001))
            dev = std::max(dev, std::abs(momentum_transfer(s, t, hk, p0).dp -
                                         hk * std::pow(std::sin(omega * t / 2), 2)));
        worst_slow = std::max(worst_slow, dev / hk);
        pass = pass && dev < 1e-2 * hk;

        const double g1 = 100.0 * omega;
        const auto fast = derive_spectrum(params(omega, g1, 0.0, 0.0));
        const double dp = std::abs(momentum_transfer(fast, 10.0 / g1, hk, p0).dp);
        worst_fast = std::max(worst_fast, dp / (std::abs(p0) + hk));
        pass = pass && dp < 1e-3 * (std::abs(p0) + hk);
    }
    return {pass, "weak damping deviation " + sci(worst_slow) + " hbar k; strong damping |dp| " +
                      sci(worst_fast) + " (|p0| + hbar k)"};
}

Outcome integrator_order()
{
    const auto h = build_hamiltonian(params(1.0, 0.0, 0.0, 0.0));
    const std::vector<double> grid{0.0, 2000.0};
    IntegratorOptions o;
    o.frame = Frame::CoRotating;
    auto error = [&](double step) {
        o.step = step;
        return std::abs(integrate(h, {cplx{0.0}, cplx{1.0}}, grid, o).psi[1][0] -
                        cplx(0.0, std::sin(1000.0)));
    };
    const double e1 = error(0.005), e2 = error(0.0025), e3 = error(0.00125);
    const double q1 = std::log2(e1 / e2), q2 = std::log2(e2 / e3);
    const bool order_ok = q1 >= 3.8 && q1 <= 4.2 && q2 >= 3.8 && q2 <= 4.2;

    double halving = 0.0;
    for (const auto& p : {params(1.0, 0.2, 0.0, 0.0), params(0.5, 1.2, 0.0, 0.0),
                          params(3.0, 0.4, 1.1, -2.5)}) {
        const auto hp = build_hamiltonian(p);
        const auto g = uniform_grid(50.0, 101);
        const auto a = integrate(hp, {cplx{0.0}, cplx{1.0}}, g);
        IntegratorOptions half;
        half.step = 0.5 * a.step;
        const auto b = integrate(hp, {cplx{0.0}, cplx{1.0}}, g, half);
        for (std::size_t k = 0; k < g.size(); ++k)
            for (int c = 0; c < 2; ++c)
                halving = std::max(halving, std::abs(a.psi[k][c] - b.psi[k][c]));
    }
    return {order_ok && halving < 1e-11, "measured order " + std::to_string(q1) + ", " +
                                             std::to_string(q2) + "; halving changes results by " +
                                             sci(halving)};
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"undamped reduction", undamped_reduction},
        {"strong-resonance Rabi structure", strong_rabi_structure},
        {"weak-resonance damping", weak_resonance_damping},
        {"rho1 prefactor adjudication", rho1_prefactor},
        {"diagonalization residual", diagonalization_residual},
        {"dressed lifetimes", dressed_lifetimes},
        {"drive design numbers", design_numbers},
        {"momentum-transfer limits", momentum_limits},
        {"integrator order", integrator_order},
    };

    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
