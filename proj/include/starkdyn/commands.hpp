#pragma once

#include "starkdyn/config.hpp"
#include "starkdyn/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace starkdyn {

enum class Subcommand
{
    Levels,
    Probs,
    Momentum,
    Dressed,
    Sweep,
    Verify,
};

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand cmd);

namespace exit_code {
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int config_error = 2;
constexpr int io_error = 3;
} // namespace exit_code

struct RunOptions
{
    std::filesystem::path out_dir = ".";
    std::uint64_t seed = 12345;
    unsigned jobs = 1;
};

/// One random reduced-unit configuration for the oracle checks:
/// Omega in [0.1, 5], gamma1, gamma2 in [0, 2], delta in [-5, 5], omega_L = 2.
ReducedParams random_draw(SplitMix64& rng);

/// Horizon used for a draw: 10 / max(gamma+, 0.1).
double draw_horizon(const ReducedParams& p);

struct DrawCheck
{
    ReducedParams params;
    double amplitude_error = 0.0;  ///< analytic vs oracle, max over the grid
    double residual = 0.0;         ///< dressed-state Schroedinger residual
    double rho1_form_error = 0.0;  ///< expanded rho1 formula vs |psi1|^2
    double rho2_form_error = 0.0;
    double printed_rho1_error = 0.0;
    double printed_rho2_error = 0.0;
    bool pass = false;
};

/// Runs every oracle check on one reduced configuration, on a grid of
/// `n_points` over [0, t_max].
DrawCheck check_draw(const ReducedParams& p, double t_max, std::size_t n_points = 201);

/// Executes one subcommand. Writes files under options.out_dir (or the paths
/// named in the config) and a short summary to `log`. Library errors
/// propagate as exceptions.
int run_subcommand(Subcommand cmd, const RunConfig& cfg, const RunOptions& options,
                   std::ostream& log);

/// Full command-line behavior: reads and parses the config file, runs the
/// subcommand and maps every error to `error: <kind>: <message>` on `err`
/// plus the documented exit code.
int run_cli(std::string_view cmd, const std::filesystem::path& config_path,
            const RunOptions& options, std::ostream& log, std::ostream& err);

} // namespace starkdyn
