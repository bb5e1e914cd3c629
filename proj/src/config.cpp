#include "starkdyn/config.hpp"

#include "starkdyn/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>

namespace starkdyn {

namespace {

struct Entry
{
    std::string value;
    int line;
};

using Entries = std::map<std::string, Entry, std::less<>>;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<std::size_t> to_size(std::string_view s)
{
    std::size_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return v;
}

using ReducedField = double ReducedParams::*;
using AtomField = double AtomParams::*;
using SiField = double SiInputs::*;

const std::map<std::string_view, ReducedField, std::less<>>& reduced_fields()
{
    static const std::map<std::string_view, ReducedField, std::less<>> fields{
        {"omega_rabi", &ReducedParams::omega_rabi}, {"gamma1", &ReducedParams::gamma1},
        {"gamma2", &ReducedParams::gamma2},         {"delta", &ReducedParams::delta},
        {"delta_omega", &ReducedParams::delta_omega}, {"e_plus", &ReducedParams::e_plus},
        {"omega_L", &ReducedParams::omega_L},       {"hbar_k", &ReducedParams::hbar_k},
        {"p0", &ReducedParams::p0},
    };
    return fields;
}

const std::map<std::string_view, AtomField, std::less<>>& atom_fields()
{
    static const std::map<std::string_view, AtomField, std::less<>> fields{
        {"mass", &AtomParams::mass},     {"omega_a", &AtomParams::omega_a},
        {"dipole", &AtomParams::dipole}, {"gamma1", &AtomParams::gamma1},
        {"gamma2", &AtomParams::gamma2},
    };
    return fields;
}

const std::map<std::string_view, SiField, std::less<>>& si_fields()
{
    static const std::map<std::string_view, SiField, std::less<>> fields{
        {"e0", &SiInputs::e0}, {"omega_L", &SiInputs::omega_L}, {"p0", &SiInputs::p0}};
    return fields;
}

constexpr std::string_view kCommonKeys[] = {
    "mode",      "t_max",     "n_points",    "csv_path",      "svg_path",    "sweep_param",
    "sweep_min", "sweep_max", "sweep_steps", "resonance_tol", "verify_draws"};

constexpr std::string_view kReducedRequired[] = {"omega_rabi", "gamma1", "gamma2", "delta"};
constexpr std::string_view kSiRequired[] = {"mass",   "omega_a", "dipole", "gamma1",
                                            "gamma2", "e0",      "omega_L"};
constexpr std::string_view kSiOnly[] = {"mass", "omega_a", "dipole", "e0", "k", "v0"};
constexpr std::string_view kReducedOnly[] = {"omega_rabi", "delta", "delta_omega", "e_plus",
                                             "hbar_k"};

template <typename Range>
bool contains(const Range& r, std::string_view key)
{
    return std::find(std::begin(r), std::end(r), key) != std::end(r);
}

bool known_key(std::string_view key)
{
    return contains(kCommonKeys, key) || contains(kSiOnly, key) || contains(kReducedOnly, key) ||
           reduced_fields().count(key) || atom_fields().count(key) || si_fields().count(key);
}

std::string at_line(int line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

Entries tokenize(std::string_view text, std::vector<std::string>& problems)
{
    Entries entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            problems.push_back(at_line(line_no, "ParseError: expected 'key = value'"));
            continue;
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            problems.push_back(at_line(line_no, "ParseError: missing key"));
            continue;
        }
        if (value.empty()) {
            problems.push_back(at_line(line_no, "ParseError: missing value for '" + key + "'"));
            continue;
        }
        if (!known_key(key)) {
            problems.push_back(at_line(line_no, "ParseError: unknown key '" + key + "'"));
            continue;
        }
        if (auto it = entries.find(key); it != entries.end()) {
            problems.push_back(at_line(line_no, "ParseError: duplicate key '" + key +
                                                    "' (first set on line " +
                                                    std::to_string(it->second.line) + ")"));
            continue;
        }
        entries.emplace(key, Entry{value, line_no});
    }
    return entries;
}

class Reader
{
public:
    Reader(const Entries& entries, std::vector<std::string>& problems)
      : entries_(entries), problems_(problems)
    {
    }

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    std::optional<double> number(std::string_view key)
    {
        auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        auto v = to_double(it->second.value);
        if (!v)
            problems_.push_back(at_line(it->second.line, "ParseError: '" + std::string(key) +
                                                             "' is not a finite number"));
        return v;
    }

    std::optional<std::size_t> count(std::string_view key)
    {
        auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        auto v = to_size(it->second.value);
        if (!v)
            problems_.push_back(at_line(it->second.line, "ParseError: '" + std::string(key) +
                                                             "' is not a non-negative integer"));
        return v;
    }

    std::optional<std::string> text(std::string_view key) const
    {
        auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        return it->second.value;
    }

    void check(bool ok, std::string_view key, const std::string& msg)
    {
        if (ok)
            return;
        auto it = entries_.find(key);
        std::string full = "ValidationError: " + std::string(key) + " " + msg;
        problems_.push_back(it == entries_.end() ? full : at_line(it->second.line, full));
    }

    void missing(std::string_view key)
    {
        problems_.push_back("ValidationError: missing required field '" + std::string(key) + "'");
    }

    void not_in_mode(std::string_view key, std::string_view mode)
    {
        auto it = entries_.find(key);
        problems_.push_back(at_line(it->second.line, "ValidationError: '" + std::string(key) +
                                                         "' is not a " + std::string(mode) +
                                                         "-mode field"));
    }

private:
    const Entries& entries_;
    std::vector<std::string>& problems_;
};

void read_reduced(Reader& r, RunConfig& cfg)
{
    for (auto key : kSiOnly)
        if (r.has(key))
            r.not_in_mode(key, "reduced");
    for (auto key : kReducedRequired)
        if (!r.has(key))
            r.missing(key);

    ReducedParams p;
    for (const auto& [key, field] : reduced_fields())
        if (auto v = r.number(key))
            p.*field = *v;

    r.check(p.omega_rabi >= 0.0, "omega_rabi", "must be >= 0");
    r.check(p.gamma1 >= 0.0, "gamma1", "must be >= 0");
    r.check(p.gamma2 >= 0.0, "gamma2", "must be >= 0");
    r.check(p.omega_L > 0.0, "omega_L", "must be > 0");
    r.check(p.hbar_k > 0.0, "hbar_k", "must be > 0");
    cfg.reduced = p;
}

void read_si(Reader& r, RunConfig& cfg)
{
    for (auto key : kReducedOnly)
        if (r.has(key))
            r.not_in_mode(key, "si");
    for (auto key : kSiRequired)
        if (!r.has(key))
            r.missing(key);

    SiInputs in;
    for (const auto& [key, field] : atom_fields())
        if (auto v = r.number(key))
            in.atom.*field = *v;
    for (const auto& [key, field] : si_fields())
        if (auto v = r.number(key))
            in.*field = *v;
    if (auto k = r.number("k"))
        in.k = *k;
    if (auto v0 = r.number("v0")) {
        r.check(!r.has("p0"), "v0", "conflicts with p0; give only one");
        in.p0 = in.atom.mass * *v0;
    }

    r.check(in.atom.mass > 0.0, "mass", "must be > 0");
    r.check(in.atom.omega_a > 0.0, "omega_a", "must be > 0");
    r.check(in.atom.dipole > 0.0, "dipole", "must be > 0");
    r.check(in.atom.gamma1 >= 0.0, "gamma1", "must be >= 0");
    r.check(in.atom.gamma2 >= 0.0, "gamma2", "must be >= 0");
    r.check(in.e0 >= 0.0, "e0", "must be >= 0");
    r.check(in.omega_L > 0.0, "omega_L", "must be > 0");
    r.check(!in.k || *in.k > 0.0, "k", "must be > 0");
    cfg.si = in;
}

void read_sweep(Reader& r, RunConfig& cfg)
{
    const bool any = r.has("sweep_param") || r.has("sweep_min") || r.has("sweep_max") ||
                     r.has("sweep_steps");
    if (!any)
        return;
    for (auto key : {"sweep_param", "sweep_min", "sweep_max", "sweep_steps"})
        if (!r.has(key))
            r.missing(key);

    SweepSpec sw;
    sw.parameter = r.text("sweep_param").value_or("");
    sw.min = r.number("sweep_min").value_or(0.0);
    sw.max = r.number("sweep_max").value_or(0.0);
    sw.steps = r.count("sweep_steps").value_or(0);
    if (r.has("sweep_param"))
        r.check(contains(sweepable_parameters(cfg.mode), sw.parameter), "sweep_param",
                "'" + sw.parameter + "' is not sweepable in this mode");
    r.check(sw.steps >= 1, "sweep_steps", "must be >= 1");
    r.check(sw.min <= sw.max, "sweep_min", "must not exceed sweep_max");
    r.check(sw.steps < 2 || sw.min < sw.max, "sweep_max", "must exceed sweep_min for 2+ steps");
    cfg.sweep = sw;
}

} // namespace

double SweepSpec::value(std::size_t i) const
{
    if (steps <= 1)
        return min;
    const double f = static_cast<double>(i) / static_cast<double>(steps - 1);
    return i + 1 == steps ? max : min + f * (max - min);
}

const std::vector<std::string_view>& sweepable_parameters(Mode mode)
{
    static const std::vector<std::string_view> reduced{"omega_rabi", "gamma1",  "gamma2", "delta",
                                                       "delta_omega", "e_plus", "omega_L",
                                                       "hbar_k",     "p0"};
    static const std::vector<std::string_view> si{"mass",   "omega_a", "dipole", "gamma1", "gamma2",
                                                  "e0",     "omega_L", "k",      "p0"};
    return mode == Mode::SI ? si : reduced;
}

RunConfig parse_config(std::string_view text)
{
    std::vector<std::string> problems;
    const Entries entries = tokenize(text, problems);
    Reader r(entries, problems);

    RunConfig cfg;
    const auto mode = r.text("mode");
    if (!mode) {
        r.missing("mode");
    } else if (*mode == "reduced") {
        cfg.mode = Mode::Reduced;
    } else if (*mode == "si") {
        cfg.mode = Mode::SI;
    } else {
        r.check(false, "mode", "must be 'si' or 'reduced', got '" + *mode + "'");
    }

    if (mode && (*mode == "reduced" || *mode == "si")) {
        if (cfg.mode == Mode::Reduced)
            read_reduced(r, cfg);
        else
            read_si(r, cfg);
        read_sweep(r, cfg);
    }

    if (auto t = r.number("t_max")) {
        cfg.t_max = *t;
        r.check(*t > 0.0, "t_max", "must be > 0");
    }
    if (auto n = r.count("n_points")) {
        cfg.n_points = *n;
        r.check(*n >= 2, "n_points", "must be >= 2");
    }
    if (auto tol = r.number("resonance_tol")) {
        cfg.resonance_tol = *tol;
        r.check(*tol >= 0.0, "resonance_tol", "must be >= 0");
    }
    if (auto n = r.count("verify_draws"))
        cfg.verify_draws = *n;
    cfg.csv_path = r.text("csv_path").value_or("");
    cfg.svg_path = r.text("svg_path").value_or("");

    if (!problems.empty())
        throw ConfigError(std::move(problems));
    return cfg;
}

RunConfig with_parameter(const RunConfig& cfg, std::string_view name, double value)
{
    if (!contains(sweepable_parameters(cfg.mode), name))
        throw ConfigError({"ValidationError: '" + std::string(name) + "' is not sweepable"});

    RunConfig out = cfg;
    if (cfg.mode == Mode::Reduced) {
        out.reduced.value().*reduced_fields().at(name) = value;
        return out;
    }
    SiInputs& in = out.si.value();
    if (name == "k")
        in.k = value;
    else if (auto it = atom_fields().find(name); it != atom_fields().end())
        in.atom.*(it->second) = value;
    else
        in.*si_fields().at(name) = value;
    return out;
}

ResolvedModel resolve(const RunConfig& cfg)
{
    if (cfg.mode == Mode::Reduced) {
        const ReducedParams& p = cfg.reduced.value();
        return {derive_spectrum(p), build_hamiltonian(p), p.hbar_k, p.p0};
    }
    const SiInputs& in = cfg.si.value();
    const auto constants = PhysicalConstants::si();
    const DriveParams drive = make_drive(in.atom, in.e0, in.omega_L, constants, in.k);
    InitialCondition init;
    init.p0 = in.p0;
    return {derive_spectrum(in.atom, drive, init, constants),
            build_hamiltonian(in.atom, drive, init, constants), constants.hbar * drive.k, in.p0};
}

} // namespace starkdyn
