// starkdyn: driven damped two-level atom, analytic dynamics and oracle checks.

#include "starkdyn/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

int main(int argc, char** argv)
{
    CLI::App app{"Exact dynamics of a damped two-level atom in a circularly polarized wave"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = ".";
    std::uint64_t seed = starkdyn::RunOptions{}.seed;
    unsigned jobs = 0;

    for (const char* name : {"levels", "probs", "momentum", "dressed", "sweep", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config, "key = value configuration file")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "seed for the verification draws");
        sub->add_option("--jobs", jobs, "worker threads (default: $STARKDYN_JOBS, else 1)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : starkdyn::exit_code::config_error;
    }

    if (jobs == 0) {
        jobs = 1;
        if (const char* env = std::getenv("STARKDYN_JOBS")) {
            try {
                jobs = static_cast<unsigned>(std::max(1L, std::stol(env)));
            } catch (const std::exception&) {
                std::cerr << "error: ConfigError: STARKDYN_JOBS='" << env << "' is not a number\n";
                return starkdyn::exit_code::config_error;
            }
        }
    }

    starkdyn::RunOptions options;
    options.out_dir = out_dir;
    options.seed = seed;
    options.jobs = jobs;
    return starkdyn::run_cli(app.get_subcommands().front()->get_name(), config, options, std::cout,
                             std::cerr);
}
