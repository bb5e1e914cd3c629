#pragma once

#include "starkdyn/oracle.hpp"
#include "starkdyn/params.hpp"
#include "starkdyn/spectrum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starkdyn {

enum class Mode
{
    SI,
    Reduced,
};

struct SiInputs
{
    AtomParams atom;
    double e0 = 0.0;
    double omega_L = 0.0;
    std::optional<double> k; ///< defaults to omega_L / c
    double p0 = 0.0;
};

struct SweepSpec
{
    std::string parameter;
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 0;

    double value(std::size_t i) const;
};

/// A validated run configuration. Exactly one of `si` / `reduced` is set,
/// matching `mode`.
struct RunConfig
{
    Mode mode = Mode::Reduced;
    std::optional<SiInputs> si;
    std::optional<ReducedParams> reduced;
    std::optional<double> t_max; ///< default grid when absent
    std::size_t n_points = 2000;
    std::string csv_path; ///< empty: <out>/<subcommand>.csv
    std::string svg_path; ///< empty: <out>/<subcommand>.svg
    std::optional<SweepSpec> sweep;
    double resonance_tol = 1e-9;
    std::size_t verify_draws = 100;
};

/// Parses the flat `key = value` format (`#` starts a comment). Collects every
/// problem and throws ConfigError listing them all.
RunConfig parse_config(std::string_view text);

/// Returns a copy of `cfg` with one numeric physical parameter replaced.
/// Throws ConfigError for names that are not sweepable in the config's mode.
RunConfig with_parameter(const RunConfig& cfg, std::string_view name, double value);

/// Physical parameters that may be swept in each mode.
const std::vector<std::string_view>& sweepable_parameters(Mode mode);

/// Everything the subcommands evaluate, built from one config.
struct ResolvedModel
{
    Spectrum spectrum;
    LatticeHamiltonian lattice;
    double hbar_k;
    double p0;
};

ResolvedModel resolve(const RunConfig& cfg);

} // namespace starkdyn
