#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starkdyn/config.hpp"
#include "starkdyn/dynamics.hpp"
#include "starkdyn/errors.hpp"

#include <algorithm>
#include <cmath>

using namespace starkdyn;

namespace {

const char* kCanonical = "mode=reduced\nomega_rabi=1.0\ngamma1=0.2\ngamma2=0\ndelta=0\nt_max=30\nn_points=2000";

const char* kSi = R"(# moderately massive atom
mode = si
mass = 1e-26
omega_a = 1e16
dipole = 1.6e-29
gamma1 = 1e9
gamma2 = 0
e0 = 1
omega_L = 1e16
v0 = 20
)";

std::vector<std::string> problems_of(std::string_view text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.problems();
    }
    return {};
}

bool mentions(const std::vector<std::string>& problems, std::string_view needle)
{
    return std::any_of(problems.begin(), problems.end(), [&](const std::string& p) {
        return p.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("canonical reduced config")
{
    const auto cfg = parse_config(kCanonical);
    CHECK(cfg.mode == Mode::Reduced);
    REQUIRE(cfg.reduced);
    CHECK_FALSE(cfg.si);
    CHECK(cfg.reduced->omega_rabi == 1.0);
    CHECK(cfg.reduced->gamma1 == 0.2);
    CHECK(cfg.reduced->gamma2 == 0.0);
    CHECK(cfg.reduced->delta == 0.0);
    CHECK(cfg.t_max == 30.0);
    CHECK(cfg.n_points == 2000);
    const auto model = resolve(cfg);
    CHECK(coupling_regime(model.spectrum) == Regime::Strong);
    CHECK(model.lattice.coupling_mag == 0.5);
}

TEST_CASE("comments, whitespace and CRLF")
{
    const auto cfg = parse_config("# header\r\n  mode = reduced  # trailing\r\n\r\nomega_rabi=2\r\n"
                                  "gamma1 =0.1\r\ngamma2= 0.05\r\ndelta\t=\t-0.5\r\nomega_L = 4\r\n");
    CHECK(cfg.reduced->omega_rabi == 2.0);
    CHECK(cfg.reduced->delta == -0.5);
    CHECK(cfg.reduced->omega_L == 4.0);
    CHECK_FALSE(cfg.t_max);
}

TEST_CASE("missing field is named")
{
    const auto p = problems_of("mode=reduced\nomega_rabi=1.0\ngamma2=0\ndelta=0\n");
    REQUIRE(p.size() == 1);
    CHECK(mentions(p, "ValidationError"));
    CHECK(mentions(p, "gamma1"));
}

TEST_CASE("every problem is reported")
{
    const auto p = problems_of("mode=reduced\nomega_rabi=-1\ngamma1=abc\nbogus=3\ndelta=0\n"
                               "delta=1\nnonsense line\nn_points=1\nmass=3\n");
    CHECK(mentions(p, "line 2"));       // omega_rabi < 0
    CHECK(mentions(p, "omega_rabi"));
    CHECK(mentions(p, "line 3: ParseError: 'gamma1'"));
    CHECK(mentions(p, "unknown key 'bogus'"));
    CHECK(mentions(p, "duplicate key 'delta'"));
    CHECK(mentions(p, "line 7: ParseError"));
    CHECK(mentions(p, "n_points"));
    CHECK(mentions(p, "gamma2"));       // missing
    CHECK(mentions(p, "'mass' is not a reduced-mode field"));
    CHECK(p.size() == 8);
}

TEST_CASE("mode handling")
{
    CHECK(mentions(problems_of("omega_rabi=1\n"), "mode"));
    CHECK(mentions(problems_of("mode=lab\n"), "must be 'si' or 'reduced'"));
}

TEST_CASE("SI config")
{
    const auto cfg = parse_config(kSi);
    CHECK(cfg.mode == Mode::SI);
    REQUIRE(cfg.si);
    CHECK_FALSE(cfg.reduced);
    CHECK(cfg.si->p0 == doctest::Approx(2e-25));
    const auto model = resolve(cfg);
    CHECK(model.spectrum.omega_rabi == doctest::Approx(3.03e5).epsilon(0.01));
    CHECK(model.spectrum.effective_detuning == doctest::Approx(6.67e8).epsilon(0.02));
    CHECK(model.hbar_k == doctest::Approx(PhysicalConstants::si().hbar * 1e16 / 299792458.0));

    // Omega scales linearly with e0.
    const auto scaled = resolve(with_parameter(cfg, "e0", 1000.0));
    CHECK(scaled.spectrum.omega_rabi == doctest::Approx(1000.0 * model.spectrum.omega_rabi));

    const auto k = parse_config(std::string(kSi) + "k = 3e7\n");
    CHECK(resolve(k).hbar_k == doctest::Approx(PhysicalConstants::si().hbar * 3e7));
}

TEST_CASE("SI validation")
{
    auto p = problems_of(std::string(kSi) + "p0 = 1e-25\nomega_rabi = 3\n");
    CHECK(mentions(p, "conflicts with p0"));
    CHECK(mentions(p, "'omega_rabi' is not a si-mode field"));
    p = problems_of("mode=si\nmass=1e-26\n");
    for (const char* f : {"omega_a", "dipole", "gamma1", "gamma2", "e0", "omega_L"})
        CHECK(mentions(p, f));
}

TEST_CASE("sweeps")
{
    const auto cfg = parse_config(std::string(kCanonical) +
                                  "\nsweep_param=omega_rabi\nsweep_min=0.5\nsweep_max=2.5\nsweep_steps=5\n");
    REQUIRE(cfg.sweep);
    CHECK(cfg.sweep->steps == 5);
    CHECK(cfg.sweep->value(0) == 0.5);
    CHECK(cfg.sweep->value(2) == doctest::Approx(1.5));
    CHECK(cfg.sweep->value(4) == 2.5);
    CHECK(with_parameter(cfg, "omega_rabi", 3.0).reduced->omega_rabi == 3.0);
    CHECK(with_parameter(cfg, "omega_rabi", 3.0).reduced->gamma1 == 0.2);

    auto p = problems_of(std::string(kCanonical) + "\nsweep_param=omega_rabi\nsweep_min=2\n"
                                                   "sweep_max=1\nsweep_steps=0\n");
    CHECK(mentions(p, "sweep_steps"));
    CHECK(mentions(p, "sweep_min"));
    p = problems_of(std::string(kCanonical) + "\nsweep_param=mass\nsweep_min=1\nsweep_max=2\nsweep_steps=3\n");
    CHECK(mentions(p, "not sweepable"));
    p = problems_of(std::string(kCanonical) + "\nsweep_param=delta\n");
    CHECK(mentions(p, "sweep_max"));
    CHECK_THROWS_AS(with_parameter(cfg, "mass", 1.0), ConfigError);

    CHECK(std::find(sweepable_parameters(Mode::SI).begin(), sweepable_parameters(Mode::SI).end(),
                    "e0") != sweepable_parameters(Mode::SI).end());
}
