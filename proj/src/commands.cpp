#include "starkdyn/commands.hpp"

#include "starkdyn/closed_form.hpp"
#include "starkdyn/dressed.hpp"
#include "starkdyn/dynamics.hpp"
#include "starkdyn/errors.hpp"
#include "starkdyn/oracle.hpp"
#include "starkdyn/output.hpp"
#include "starkdyn/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace starkdyn {

namespace {

namespace fs = std::filesystem;

constexpr double kOracleThreshold = 1e-8;
constexpr double kResidualThreshold = 1e-10;
constexpr double kFormThreshold = 1e-12;
constexpr std::size_t kResidualSamples = 50;

fs::path output_path(const RunConfig& cfg, const RunOptions& opt, Subcommand cmd,
                     std::string_view ext)
{
    const std::string& explicit_path = ext == ".csv" ? cfg.csv_path : cfg.svg_path;
    if (!explicit_path.empty())
        return explicit_path;
    return opt.out_dir / (std::string(to_string(cmd)) + std::string(ext));
}

void ensure_dir(const fs::path& file)
{
    const auto dir = file.parent_path();
    if (dir.empty())
        return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::vector<double> time_grid(const RunConfig& cfg, const Spectrum& s)
{
    return cfg.t_max ? uniform_grid(*cfg.t_max, cfg.n_points) : default_time_grid(s, cfg.n_points);
}

void emit(const fs::path& csv, const fs::path& svg, const Series& series, std::string_view title,
          std::ostream& log)
{
    ensure_dir(csv);
    write_csv(csv, series);
    ensure_dir(svg);
    write_svg(svg, series, title);
    log << "wrote " << csv.string() << " and " << svg.string() << '\n';
}

std::string num(double v) { return format_double(v); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<double> residual_samples(double t_max)
{
    std::vector<double> t(kResidualSamples);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = t_max * static_cast<double>(i) / static_cast<double>(t.size() - 1);
    return t;
}

int run_levels(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    const auto model = resolve(cfg);
    const StarkLevels lv = stark_levels(model.spectrum);
    std::vector<std::vector<std::string>> rows;
    for (const auto& l : lv.levels)
        rows.push_back({std::string(to_string(l.label)), num(l.energy_real), num(l.energy_imag),
                        num(l.damping_rate)});
    const auto csv = output_path(cfg, opt, Subcommand::Levels, ".csv");
    ensure_dir(csv);
    write_csv(csv, {"label", "energy_real", "energy_imag", "damping_rate"}, rows);
    log << "splitting " << num(lv.splitting) << "\nwrote " << csv.string() << '\n';
    return exit_code::ok;
}

int run_probs(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    const auto model = resolve(cfg);
    const auto t = time_grid(cfg, model.spectrum);
    const auto traj = evaluate_trajectory(model.spectrum, t, model.hbar_k, model.p0, opt.jobs);
    const Series s{{"t", "rho1", "rho2", "total"}, {traj.times, traj.rho1, traj.rho2, traj.total}};
    log << "regime " << to_string(traj.regime) << '\n';
    emit(output_path(cfg, opt, Subcommand::Probs, ".csv"),
         output_path(cfg, opt, Subcommand::Probs, ".svg"), s, "occupation probabilities", log);
    return exit_code::ok;
}

int run_momentum(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    const auto model = resolve(cfg);
    const auto t = time_grid(cfg, model.spectrum);
    const auto traj = evaluate_trajectory(model.spectrum, t, model.hbar_k, model.p0, opt.jobs);
    const Series s{{"t", "dp", "force"}, {traj.times, traj.dp, traj.force}};
    emit(output_path(cfg, opt, Subcommand::Momentum, ".csv"),
         output_path(cfg, opt, Subcommand::Momentum, ".svg"), s, "momentum transfer", log);
    return exit_code::ok;
}

int run_dressed(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    const auto model = resolve(cfg);
    const auto& s = model.spectrum;
    const DressedBasis b = dressed_basis(s);
    const DressedLevels lv = dressed_levels(s);
    const auto t = time_grid(cfg, s);
    const double residual = verify_diagonalization(s, model.lattice, residual_samples(t.back()));

    const auto csv = output_path(cfg, opt, Subcommand::Dressed, ".csv");
    ensure_dir(csv);
    write_csv(csv,
              {"theta_minus_mix", "theta_plus_mix", "phase_minus", "phase_plus", "a1_re", "a1_im",
               "a2_re", "a2_im", "energy_minus", "energy_plus", "lifetime_minus", "lifetime_plus",
               "residual"},
              {{num(b.theta_minus_mix), num(b.theta_plus_mix), num(b.phase_minus),
                num(b.phase_plus), num(b.a1.real()), num(b.a1.imag()), num(b.a2.real()),
                num(b.a2.imag()), num(lv.energy_minus), num(lv.energy_plus),
                num(lv.lifetime_minus), num(lv.lifetime_plus), num(residual)}});
    log << "tau_minus " << num(lv.lifetime_minus) << " tau_plus " << num(lv.lifetime_plus)
        << " residual " << num(residual) << "\nwrote " << csv.string() << '\n';
    return exit_code::ok;
}

int run_sweep(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    if (!cfg.sweep)
        throw ConfigError({"ValidationError: sweep needs sweep_param, sweep_min, sweep_max and "
                           "sweep_steps"});
    const SweepSpec& sw = *cfg.sweep;

    struct Point
    {
        double splitting, tau_minus, tau_plus, max_rho1, final_dp;
    };
    std::vector<Point> points(sw.steps);
    parallel_for(sw.steps, opt.jobs, [&](std::size_t i) {
        const auto model = resolve(with_parameter(cfg, sw.parameter, sw.value(i)));
        const auto t = time_grid(cfg, model.spectrum);
        const auto traj = evaluate_trajectory(model.spectrum, t, model.hbar_k, model.p0, 1);
        const auto lv = dressed_levels(model.spectrum);
        points[i] = {stark_levels(model.spectrum).splitting, lv.lifetime_minus, lv.lifetime_plus,
                     *std::max_element(traj.rho1.begin(), traj.rho1.end()), traj.dp.back()};
    });

    Series s{{sw.parameter, "splitting", "lifetime_minus", "lifetime_plus", "max_rho1", "final_dp"},
             std::vector<std::vector<double>>(6)};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        s.columns[0].push_back(sw.value(i));
        s.columns[1].push_back(p.splitting);
        s.columns[2].push_back(p.tau_minus);
        s.columns[3].push_back(p.tau_plus);
        s.columns[4].push_back(p.max_rho1);
        s.columns[5].push_back(p.final_dp);
    }
    emit(output_path(cfg, opt, Subcommand::Sweep, ".csv"),
         output_path(cfg, opt, Subcommand::Sweep, ".svg"), s, "parameter sweep", log);
    return exit_code::ok;
}

// Analytic vs oracle on the configuration's own grid.
ComparisonReport check_config(const RunConfig& cfg, unsigned jobs)
{
    const auto model = resolve(cfg);
    const auto t = time_grid(cfg, model.spectrum);
    const auto traj = evaluate_trajectory(model.spectrum, t, model.hbar_k, model.p0, jobs);
    IntegratorOptions io;
    io.frame = cfg.mode == Mode::SI ? Frame::CoRotating : Frame::CommonPhase;
    OracleResult oracle;
    try {
        oracle = integrate(model.lattice, {cplx{0.0}, cplx{1.0}}, t, io);
    } catch (const StepSizeError&) {
        // The drive rotates too fast for the common-phase frame.
        io.frame = Frame::CoRotating;
        oracle = integrate(model.lattice, {cplx{0.0}, cplx{1.0}}, t, io);
    }
    return compare(traj, oracle, kOracleThreshold);
}

int run_verify(const RunConfig& cfg, const RunOptions& opt, std::ostream& log)
{
    const ComparisonReport own = check_config(cfg, opt.jobs);

    SplitMix64 rng(opt.seed);
    std::vector<ReducedParams> draws;
    draws.reserve(cfg.verify_draws);
    for (std::size_t i = 0; i < cfg.verify_draws; ++i)
        draws.push_back(random_draw(rng));

    std::vector<DrawCheck> checks(draws.size());
    parallel_for(draws.size(), opt.jobs,
                 [&](std::size_t i) { checks[i] = check_draw(draws[i], draw_horizon(draws[i])); });

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"config", "", "", "", "", num(own.max_amplitude_error), "", "", "", "", "",
                    own.pass ? "PASS" : "FAIL"});
    std::size_t failures = own.pass ? 0 : 1;
    std::size_t printed_rho1_off = 0;
    std::size_t printed_rho2_off = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        rows.push_back({"draw_" + std::to_string(i), num(c.params.omega_rabi), num(c.params.gamma1),
                        num(c.params.gamma2), num(c.params.delta), num(c.amplitude_error),
                        num(c.residual), num(c.rho1_form_error), num(c.rho2_form_error),
                        num(c.printed_rho1_error), num(c.printed_rho2_error),
                        c.pass ? "PASS" : "FAIL"});
        failures += c.pass ? 0 : 1;
        printed_rho1_off += c.printed_rho1_error > kFormThreshold ? 1 : 0;
        printed_rho2_off += c.printed_rho2_error > kFormThreshold ? 1 : 0;
    }

    const auto csv = output_path(cfg, opt, Subcommand::Verify, ".csv");
    ensure_dir(csv);
    write_csv(csv,
              {"case", "omega_rabi", "gamma1", "gamma2", "delta", "max_amplitude_error",
               "residual", "rho1_form_error", "rho2_form_error", "printed_rho1_error",
               "printed_rho2_error", "status"},
              rows);

    log << "config: " << (own.pass ? "PASS" : "FAIL") << " max amplitude error "
        << num(own.max_amplitude_error);
    if (own.first_divergence_time)
        log << " (diverges at t = " << num(*own.first_divergence_time) << ")";
    log << '\n'
        << "draws: " << checks.size() - (failures - (own.pass ? 0 : 1)) << '/' << checks.size()
        << " PASS (seed " << opt.seed << ")\n"
        << "published rho1 prefactor off in " << printed_rho1_off << '/' << checks.size()
        << " draws; published rho2 off in " << printed_rho2_off << '/' << checks.size() << '\n'
        << "wrote " << csv.string() << '\n';
    return failures == 0 ? exit_code::ok : exit_code::verification_failed;
}

} // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name)
{
    for (auto cmd : {Subcommand::Levels, Subcommand::Probs, Subcommand::Momentum,
                     Subcommand::Dressed, Subcommand::Sweep, Subcommand::Verify})
        if (to_string(cmd) == name)
            return cmd;
    return std::nullopt;
}

std::string_view to_string(Subcommand cmd)
{
    switch (cmd) {
    case Subcommand::Levels: return "levels";
    case Subcommand::Probs: return "probs";
    case Subcommand::Momentum: return "momentum";
    case Subcommand::Dressed: return "dressed";
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Verify: return "verify";
    }
    return "?";
}

ReducedParams random_draw(SplitMix64& rng)
{
    ReducedParams p;
    p.omega_rabi = rng.uniform(0.1, 5.0);
    p.gamma1 = rng.uniform(0.0, 2.0);
    p.gamma2 = rng.uniform(0.0, 2.0);
    p.delta = rng.uniform(-5.0, 5.0);
    p.omega_L = 2.0;
    return p;
}

double draw_horizon(const ReducedParams& p) { return 10.0 / std::max(p.gamma1 + p.gamma2, 0.1); }

DrawCheck check_draw(const ReducedParams& p, double t_max, std::size_t n_points)
{
    DrawCheck c;
    c.params = p;
    const Spectrum s = derive_spectrum(p);
    const LatticeHamiltonian h = build_hamiltonian(p);
    const auto t = uniform_grid(t_max, n_points);

    const auto traj = evaluate_trajectory(s, t, p.hbar_k, p.p0, 1);
    const auto oracle = integrate(h, {cplx{0.0}, cplx{1.0}}, t);
    c.amplitude_error = compare(traj, oracle, kOracleThreshold).max_amplitude_error;
    c.residual = verify_diagonalization(s, h, residual_samples(t_max));

    std::vector<double> r1(t.size()), r2(t.size()), pr1(t.size()), pr2(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        r1[i] = closed_form::rho1(s, t[i]);
        r2[i] = closed_form::rho2(s, t[i]);
        pr1[i] = closed_form::printed_rho1(s, t[i]);
        pr2[i] = closed_form::printed_rho2(s, t[i]);
    }
    c.rho1_form_error = max_abs_diff(r1, traj.rho1);
    c.rho2_form_error = max_abs_diff(r2, traj.rho2);
    c.printed_rho1_error = max_abs_diff(pr1, traj.rho1);
    c.printed_rho2_error = max_abs_diff(pr2, traj.rho2);

    c.pass = c.amplitude_error < kOracleThreshold && c.residual < kResidualThreshold &&
             c.rho1_form_error < kFormThreshold && c.rho2_form_error < kFormThreshold;
    return c;
}

int run_subcommand(Subcommand cmd, const RunConfig& cfg, const RunOptions& options,
                   std::ostream& log)
{
    switch (cmd) {
    case Subcommand::Levels: return run_levels(cfg, options, log);
    case Subcommand::Probs: return run_probs(cfg, options, log);
    case Subcommand::Momentum: return run_momentum(cfg, options, log);
    case Subcommand::Dressed: return run_dressed(cfg, options, log);
    case Subcommand::Sweep: return run_sweep(cfg, options, log);
    case Subcommand::Verify: return run_verify(cfg, options, log);
    }
    return exit_code::config_error;
}

int run_cli(std::string_view cmd_name, const fs::path& config_path, const RunOptions& options,
            std::ostream& log, std::ostream& err)
{
    const auto cmd = parse_subcommand(cmd_name);
    if (!cmd) {
        err << "error: ConfigError: unknown subcommand '" << cmd_name << "'\n";
        return exit_code::config_error;
    }
    try {
        std::ifstream f(config_path, std::ios::binary);
        if (!f)
            throw IoError("cannot read config '" + config_path.string() + "'");
        std::ostringstream text;
        text << f.rdbuf();
        const RunConfig cfg = parse_config(text.str());
        return run_subcommand(*cmd, cfg, options, log);
    } catch (const ConfigError& e) {
        for (const auto& p : e.problems())
            err << "error: ConfigError: " << p << '\n';
        return exit_code::config_error;
    } catch (const IoError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_code::io_error;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_code::config_error;
    } catch (const std::bad_optional_access&) {
        err << "error: ConfigError: incomplete configuration\n";
        return exit_code::config_error;
    }
}

} // namespace starkdyn
