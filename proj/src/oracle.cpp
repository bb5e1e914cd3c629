#include "starkdyn/oracle.hpp"

#include "starkdyn/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace starkdyn {

namespace {

constexpr cplx I{0.0, 1.0};
using Vec2 = std::array<cplx, 2>;

// Generator of the frame ODE, d/dt u = -i A(t) u, in units of 1/s (or
// reduced units). Diagonal entries are constant; the off-diagonal coupling
// rotates at omega_L in the common-phase frame and is constant otherwise.
struct FrameSystem
{
    cplx a11;
    cplx a22;
    double half_omega;
    double rotation; // 0 in the co-rotating frame

    Vec2 derivative(double t, const Vec2& u) const
    {
        cplx c12 = -half_omega;
        cplx c21 = -half_omega;
        if (rotation != 0.0) {
            const cplx ph = std::polar(1.0, -rotation * t);
            c12 *= ph;
            c21 *= std::conj(ph);
        }
        return {-I * (a11 * u[0] + c12 * u[1]), -I * (c21 * u[0] + a22 * u[1])};
    }
};

struct FrameRates
{
    double omega_rel;
    double omega_rabi;
    double gamma_plus;
    double gamma_max;
};

// Re(h11 - h22)/hbar: the bare transition frequency plus the kinetic
// (recoil and Doppler) shift.
double bare_splitting(const LatticeHamiltonian& h) { return h.drive_detuning + h.omega_L; }

FrameSystem make_system(const LatticeHamiltonian& h, Frame frame)
{
    const double split = bare_splitting(h);
    const double g1 = h.h11.imag() / h.hbar;
    const double g2 = h.h22.imag() / h.hbar;
    const double half_omega = h.coupling_mag / h.hbar;
    if (frame == Frame::CoRotating) {
        const double d = 0.5 * h.drive_detuning;
        return {cplx(d, g1), cplx(-d, g2), half_omega, 0.0};
    }
    return {cplx(0.5 * split, g1), cplx(-0.5 * split, g2), half_omega, h.omega_L};
}

FrameRates frame_rates(const LatticeHamiltonian& h, Frame frame)
{
    const double split = bare_splitting(h);
    const double omega_rel = frame == Frame::CoRotating ? 0.5 * std::abs(h.drive_detuning)
                                                        : 0.5 * std::abs(split) + h.omega_L;
    const double g1 = -h.h11.imag() / h.hbar;
    const double g2 = -h.h22.imag() / h.hbar;
    return {omega_rel, 2.0 * h.coupling_mag / h.hbar, g1 + g2, std::max(g1, g2)};
}

Vec2 rk4_step(const FrameSystem& sys, double t, double dt, const Vec2& u)
{
    auto axpy = [](const Vec2& y, double a, const Vec2& k) {
        return Vec2{y[0] + a * k[0], y[1] + a * k[1]};
    };
    const Vec2 k1 = sys.derivative(t, u);
    const Vec2 k2 = sys.derivative(t + 0.5 * dt, axpy(u, 0.5 * dt, k1));
    const Vec2 k3 = sys.derivative(t + 0.5 * dt, axpy(u, 0.5 * dt, k2));
    const Vec2 k4 = sys.derivative(t + dt, axpy(u, dt, k3));
    const double w = dt / 6.0;
    return {u[0] + w * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            u[1] + w * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

void check_grid(std::span<const double> times)
{
    if (times.empty())
        throw ParameterError("oracle grid is empty");
    if (times[0] != 0.0)
        throw ParameterError("oracle grid must start at t = 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !(times[i] > times[i - 1]))
            throw ParameterError("oracle grid must be finite and strictly increasing (index " +
                                 std::to_string(i) + ")");
    }
}

} // namespace

std::array<cplx, 4> LatticeHamiltonian::at(double t) const
{
    const cplx ph = std::polar(1.0, -omega_L * t);
    return {h11, -coupling_mag * ph, -coupling_mag * std::conj(ph), h22};
}

LatticeHamiltonian build_hamiltonian(const AtomParams& atom, const DriveParams& drive,
                                     const InitialCondition& init,
                                     const PhysicalConstants& constants)
{
    InitialCondition as_state2 = init;
    as_state2.state = InitialState::State2;
    validate(atom, drive, as_state2, constants);

    const double hbar = constants.hbar;
    const double hk = hbar * drive.k;
    const double p1 = init.p0 + hk;
    const double p2 = init.p0;
    const double m2 = 2.0 * atom.mass;

    LatticeHamiltonian h;
    h.hbar = hbar;
    h.h11 = cplx(p1 * p1 / m2 + 0.5 * hbar * atom.omega_a, -hbar * atom.gamma1);
    h.h22 = cplx(p2 * p2 / m2 - 0.5 * hbar * atom.omega_a, -hbar * atom.gamma2);
    h.coupling_mag = 0.5 * hbar * drive.omega_rabi;
    h.omega_L = drive.omega_L;
    h.drive_detuning = hk * (p1 + p2) / (m2 * hbar) + (atom.omega_a - drive.omega_L);
    return h;
}

LatticeHamiltonian build_hamiltonian(const ReducedParams& p)
{
    validate(p);
    // Kinetic plus internal energies enter only through their sum (E+) and
    // their difference measured against the drive (delta + omega_L).
    LatticeHamiltonian h;
    h.hbar = 1.0;
    h.h11 = cplx(0.5 * (p.e_plus + p.delta + p.omega_L), -p.gamma1);
    h.h22 = cplx(0.5 * (p.e_plus - p.delta - p.omega_L), -p.gamma2);
    h.coupling_mag = 0.5 * p.omega_rabi;
    h.omega_L = p.omega_L;
    h.drive_detuning = p.delta;
    return h;
}

double stability_bound(const LatticeHamiltonian& h, Frame frame)
{
    const auto r = frame_rates(h, frame);
    double bound = std::numeric_limits<double>::infinity();
    if (r.omega_rel > 0.0)
        bound = std::min(bound, 2.0 * std::numbers::pi / r.omega_rel);
    if (r.gamma_plus > 0.0)
        bound = std::min(bound, 1.0 / r.gamma_plus);
    if (r.omega_rabi > 0.0)
        bound = std::min(bound, 1.0 / r.omega_rabi);
    return bound / 200.0;
}

OracleResult integrate(const LatticeHamiltonian& h, std::array<cplx, 2> initial,
                       std::span<const double> times, const IntegratorOptions& options)
{
    check_grid(times);

    OracleResult out;
    out.times.assign(times.begin(), times.end());
    out.psi.reserve(times.size());
    out.psi.push_back(initial);
    if (times.size() == 1)
        return out;

    const auto rates = frame_rates(h, options.frame);
    const double horizon = times.back();
    const double lambda = rates.omega_rel + 0.5 * rates.omega_rabi + rates.gamma_max;
    const double bound = stability_bound(h, options.frame);

    double step = 0.0;
    if (options.step) {
        if (!(*options.step > 0.0) || *options.step > bound * (1.0 + 1e-12))
            throw StepSizeError("forced step " + std::to_string(*options.step) +
                                " exceeds the stability bound " + std::to_string(bound));
        step = *options.step;
    } else {
        // RK4 global error ~ T lambda^5 h^4 / 120 for a linear system whose
        // generator norm is at most lambda.
        double accurate = std::numeric_limits<double>::infinity();
        if (lambda > 0.0)
            accurate = std::pow(120.0 * options.error_target / (horizon * std::pow(lambda, 5)), 0.25);
        step = std::min(bound, accurate);
        if (!std::isfinite(step))
            step = horizon;
    }

    std::vector<std::size_t> substeps(times.size(), 0);
    std::size_t total_steps = 0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double n = std::ceil((times[i] - times[i - 1]) / step * (1.0 - 1e-12));
        if (n > static_cast<double>(options.max_steps))
            throw StepSizeError("step budget exceeded; use the co-rotating frame");
        substeps[i] = std::max<std::size_t>(1, static_cast<std::size_t>(n));
        total_steps += substeps[i];
        if (total_steps > options.max_steps)
            throw StepSizeError("step budget of " + std::to_string(options.max_steps) +
                                " RK4 steps exceeded; use the co-rotating frame");
    }

    const FrameSystem sys = make_system(h, options.frame);
    Vec2 u = initial;
    double largest = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double t0 = times[i - 1];
        const double span = times[i] - t0;
        const std::size_t n = substeps[i];
        const double dt = span / static_cast<double>(n);
        largest = std::max(largest, dt);
        for (std::size_t j = 0; j < n; ++j)
            u = rk4_step(sys, t0 + static_cast<double>(j) * dt, dt, u);

        if (options.frame == Frame::CommonPhase) {
            const cplx ph = std::polar(1.0, 0.5 * h.omega_L * times[i]);
            out.psi.push_back({u[0] * ph, u[1] * std::conj(ph)});
        } else {
            out.psi.push_back(u);
        }
    }

    out.step_count = total_steps;
    out.step = largest;
    out.max_step_error_estimate = horizon * std::pow(lambda, 5) * std::pow(largest, 4) / 120.0;
    return out;
}

ComparisonReport compare(const Trajectory& analytic, const OracleResult& oracle, double threshold)
{
    if (analytic.times.size() != oracle.times.size() || analytic.psi1.size() != analytic.times.size() ||
        oracle.psi.size() != oracle.times.size())
        throw GridMismatch("analytic and oracle grids have different lengths");
    for (std::size_t i = 0; i < analytic.times.size(); ++i) {
        if (analytic.times[i] != oracle.times[i])
            throw GridMismatch("grids differ at index " + std::to_string(i));
    }

    ComparisonReport report;
    for (std::size_t i = 0; i < analytic.times.size(); ++i) {
        const auto& o = oracle.psi[i];
        const double amp = std::max(std::abs(analytic.psi1[i] - o[0]), std::abs(analytic.psi2[i] - o[1]));
        const double prob = std::max(std::abs(analytic.rho1[i] - std::norm(o[0])),
                                     std::abs(analytic.rho2[i] - std::norm(o[1])));
        report.max_amplitude_error = std::max(report.max_amplitude_error, amp);
        report.max_probability_error = std::max(report.max_probability_error, prob);
        if (!report.first_divergence_time && !(amp < threshold))
            report.first_divergence_time = analytic.times[i];
    }
    report.pass = report.max_amplitude_error < threshold;
    return report;
}

} // namespace starkdyn
