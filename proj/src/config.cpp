// SPDX-License-Identifier: Apache-2.0
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lpi/error.hpp"
#include "lpi/scenario.hpp"

namespace lpi
{
namespace
{
using constants::GHz;
using constants::mA;
using constants::ns;
using constants::ps;
using constants::THz;
using constants::two_pi;

std::string trim(std::string_view s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

//! Shortest text that parses back to the same double.
std::string format_double(double v)
{
    char buf[64];
    auto const r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

//! Engineering-unit text x with x * scale == v when such an x is nearby.
std::string format_scaled(double v, double scale)
{
    double const guess = v / scale;
    double down = guess;
    double up = guess;
    for (int k = 0; k < 4 && guess * scale != v; ++k)
    {
        down = std::nextafter(down, -HUGE_VAL);
        up = std::nextafter(up, HUGE_VAL);
        if (down * scale == v)
            return format_double(down);
        if (up * scale == v)
            return format_double(up);
    }
    return format_double(guess);
}

//! Accessors for one config key in engineering units.
struct KeySpec
{
    std::function<void(ScenarioConfig&, std::string const&)> set;
    std::function<std::string(ScenarioConfig const&)> get;
};

double parse_number(std::string const& text)
{
    double v = 0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        throw std::invalid_argument("expected a finite number, got '" + text + "'");
    return v;
}

unsigned long long parse_count(std::string const& text)
{
    unsigned long long v = 0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
    return v;
}

bool parse_bool(std::string const& text)
{
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw std::invalid_argument("expected true or false, got '" + text + "'");
}

//! Stored SI value = text value * scale.
template<class Getter>
KeySpec real_key(Getter field, double scale)
{
    return {[field, scale](ScenarioConfig& c, std::string const& v) {
                field(c) = parse_number(v) * scale;
            },
            [field, scale](ScenarioConfig const& c) {
                return format_scaled(field(c), scale);
            }};
}

template<class Getter>
KeySpec count_key(Getter field)
{
    return {[field](ScenarioConfig& c, std::string const& v) {
                using T = std::remove_reference_t<decltype(field(c))>;
                field(c) = static_cast<T>(parse_count(v));
            },
            [field](ScenarioConfig const& c) {
                return std::to_string(field(c));
            }};
}

BandpassFilter& filter_of(ScenarioConfig& c)
{
    if (!c.filter)
        c.filter.emplace();
    return *c.filter;
}

std::map<std::string, KeySpec> const& key_table()
{
    static std::map<std::string, KeySpec> const table = [] {
        std::map<std::string, KeySpec> t;
        // clang-format off
        t["scenario.name"] = {[](ScenarioConfig& c, std::string const& v) {
                                  if (v.empty()) throw std::invalid_argument("empty name");
                                  c.name = v; },
                              [](ScenarioConfig const& c) { return c.name; }};

        t["laser.n_th"] = real_key([](auto& c) -> auto& { return c.laser.carrier_threshold; }, 1);
        t["laser.n_0"] = real_key([](auto& c) -> auto& { return c.laser.carrier_transparency; }, 1);
        t["laser.c_sp"] = real_key([](auto& c) -> auto& { return c.laser.spontaneous_fraction; }, 1);
        t["laser.gamma"] = real_key([](auto& c) -> auto& { return c.laser.confinement; }, 1);
        t["laser.epsilon"] = real_key([](auto& c) -> auto& { return c.laser.quantum_output; }, 1);
        t["laser.tau_e_ns"] = real_key([](auto& c) -> auto& { return c.laser.electron_lifetime; }, ns);
        t["laser.tau_ph_ps"] = real_key([](auto& c) -> auto& { return c.laser.photon_lifetime; }, ps);
        t["laser.alpha"] = real_key([](auto& c) -> auto& { return c.laser.henry_alpha; }, 1);
        t["laser.chi_per_W"] = real_key([](auto& c) -> auto& { return c.laser.gain_compression; }, 1);
        t["laser.carrier_THz"] = real_key([](auto& c) -> auto& { return c.laser.carrier_angular_freq; }, two_pi * THz);

        t["pump.bias_mA"] = real_key([](auto& c) -> auto& { return c.pump.bias; }, mA);
        t["pump.peak_mA"] = real_key([](auto& c) -> auto& { return c.pump.peak_to_peak; }, mA);
        t["pump.width_ps"] = real_key([](auto& c) -> auto& { return c.pump.pulse_width; }, ps);
        t["pump.rep_rate_GHz"] = real_key([](auto& c) -> auto& { return c.pump.modulation_freq; }, two_pi * GHz);

        t["grid.dt_ps"] = real_key([](auto& c) -> auto& { return c.grid.dt; }, ps);
        t["grid.warmup_periods"] = count_key([](auto& c) -> auto& { return c.grid.warmup_periods; });
        t["grid.total_periods"] = count_key([](auto& c) -> auto& { return c.grid.total_periods; });

        t["interferometer.t1"] = real_key([](auto& c) -> auto& { return c.interferometer.coupler_short; }, 1);
        t["interferometer.t2"] = real_key([](auto& c) -> auto& { return c.interferometer.coupler_long; }, 1);
        t["interferometer.a1"] = real_key([](auto& c) -> auto& { return c.interferometer.loss_short; }, 1);
        t["interferometer.a2"] = real_key([](auto& c) -> auto& { return c.interferometer.loss_long; }, 1);
        t["interferometer.n_p"] = count_key([](auto& c) -> auto& { return c.interferometer.pulses_in_delay; });
        t["interferometer.n"] = real_key([](auto& c) -> auto& { return c.interferometer.fiber_index; }, 1);
        t["interferometer.n_g"] = real_key([](auto& c) -> auto& { return c.interferometer.group_index; }, 1);

        t["noise.jitter_ps"] = real_key([](auto& c) -> auto& { return c.noise.jitter_rms; }, ps);
        t["noise.amplitude_rms"] = real_key([](auto& c) -> auto& { return c.noise.amplitude_rms; }, 1);
        t["noise.phase_rms_rad"] = real_key([](auto& c) -> auto& { return c.noise.phase_rms; }, 1);
        t["noise.detector_rms"] = real_key([](auto& c) -> auto& { return c.noise.detector_rms; }, 1);

        t["mc.iterations"] = count_key([](auto& c) -> auto& { return c.mc.iterations; });
        t["mc.seed"] = count_key([](auto& c) -> auto& { return c.mc.seed; });
        t["mc.delta_theta_rad"] = real_key([](auto& c) -> auto& { return c.mc.delta_theta; }, 1);
        t["mc.bins"] = count_key([](auto& c) -> auto& { return c.bins; });

        t["filter.enabled"] = {[](ScenarioConfig& c, std::string const& v) {
                                   if (parse_bool(v)) filter_of(c); else c.filter.reset(); },
                               [](ScenarioConfig const& c) { return std::string(c.filter ? "true" : "false"); }};
        t["filter.center_GHz"] = {[](ScenarioConfig& c, std::string const& v) {
                                      filter_of(c).center_detuning = parse_number(v) * (two_pi * GHz); },
                                  [](ScenarioConfig const& c) {
                                      return format_scaled(c.filter ? c.filter->center_detuning : 0.0, two_pi * GHz); }};
        t["filter.fwhm_GHz"] = {[](ScenarioConfig& c, std::string const& v) {
                                    filter_of(c).fwhm = parse_number(v) * (two_pi * GHz); },
                                [](ScenarioConfig const& c) {
                                    return format_scaled(c.filter ? c.filter->fwhm : BandpassFilter{}.fwhm, two_pi * GHz); }};
        t["filter.order"] = {[](ScenarioConfig& c, std::string const& v) {
                                 filter_of(c).shape_order = static_cast<unsigned>(parse_count(v)); },
                             [](ScenarioConfig const& c) {
                                 return std::to_string(c.filter ? c.filter->shape_order : BandpassFilter{}.shape_order); }};

        t["output.samples"] = {[](ScenarioConfig& c, std::string const& v) { c.outputs.emit_samples = parse_bool(v); },
                               [](ScenarioConfig const& c) { return std::string(c.outputs.emit_samples ? "true" : "false"); }};
        t["output.spectrum"] = {[](ScenarioConfig& c, std::string const& v) { c.outputs.emit_spectrum = parse_bool(v); },
                                [](ScenarioConfig const& c) { return std::string(c.outputs.emit_spectrum ? "true" : "false"); }};
        t["output.pulse"] = {[](ScenarioConfig& c, std::string const& v) { c.outputs.emit_pulse = parse_bool(v); },
                             [](ScenarioConfig const& c) { return std::string(c.outputs.emit_pulse ? "true" : "false"); }};
        // clang-format on
        return t;
    }();
    return table;
}

bool valid_identifier(std::string const& s)
{
    if (s.empty())
        return false;
    for (char ch : s)
    {
        bool const ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
        if (!ok)
            return false;
    }
    return s.front() != '.' && s.back() != '.';
}
}  // namespace

//---------------------------------------------------------------------------//
ScenarioConfig ScenarioConfig::defaults()
{
    ScenarioConfig c;
    c.noise.detector_rms = 0.05;
    return c;
}

void ScenarioConfig::validate() const
{
    require(!name.empty(), "scenario name is not empty");
    laser.validate();
    pump.validate();
    grid.validate(laser);
    interferometer.validate();
    noise.validate();
    mc.validate();
    require(bins >= peak_min_bins, "bins >= 16");
    if (filter)
        filter->validate();
}

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig config = ScenarioConfig::defaults();
    auto const& table = key_table();
    std::set<std::string> seen;
    std::string section;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto const eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view line = raw.substr(0, raw.find('#'));
        std::string const content = trim(line);
        if (content.empty())
            continue;
        std::size_t const indent = line.find_first_not_of(" \t") + 1;

        if (content.front() == '[')
        {
            if (content.back() != ']')
                throw ParseError(line_no, indent, "section header is missing ']'");
            section = trim(std::string_view(content).substr(1, content.size() - 2));
            if (!valid_identifier(section))
                throw ParseError(line_no, indent + 1, "invalid section name '" + section + "'");
            continue;
        }

        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, indent, "expected 'key = value'");
        std::string const key_text = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        if (!valid_identifier(key_text))
            throw ParseError(line_no, indent, "invalid key '" + key_text + "'");
        std::string const key = section.empty() ? key_text : section + "." + key_text;

        auto const it = table.find(key);
        if (it == table.end())
            throw ParseError(line_no, indent, "unknown key '" + key + "'");
        if (!seen.insert(key).second)
            throw ParseError(line_no, indent, "duplicate key '" + key + "'");

        if (value.empty())
            throw ParseError(line_no, eq + 2, "missing value for '" + key + "'");
        std::size_t const value_col = eq + 2 + line.substr(eq + 1).find_first_not_of(" \t");
        try
        {
            it->second.set(config, value);
        }
        catch (std::invalid_argument const& e)
        {
            throw ParseError(line_no, value_col, key + ": " + e.what());
        }
    }
    config.validate();
    return config;
}

ScenarioConfig load_config_file(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(ScenarioConfig const& config)
{
    std::ostringstream out;
    for (auto const& [key, spec] : key_table())
    {
        if (key.starts_with("filter.") && key != "filter.enabled" && !config.filter)
            continue;
        out << key << " = " << spec.get(config) << '\n';
    }
    return out.str();
}

//---------------------------------------------------------------------------//
std::vector<std::string> preset_names() { return {"fig2a", "fig2b", "fig2c", "fig3", "fig4"}; }

std::vector<ScenarioConfig> preset_runs(std::string_view name)
{
    ScenarioConfig base = ScenarioConfig::defaults();
    base.laser.gain_compression = 25;
    base.pump.bias = 7 * mA;
    base.pump.peak_to_peak = 10 * mA;
    base.noise.detector_rms = 0.05;

    if (name == "fig2a")
    {
        base.name = "fig2a";
        base.laser.henry_alpha = 0;
        return {base};
    }
    if (name == "fig2b")
    {
        base.name = "fig2b";
        base.laser.henry_alpha = 6;
        return {base};
    }
    if (name == "fig2c")
    {
        base.name = "fig2c";
        base.laser.henry_alpha = 6;
        base.pump.bias = 9 * mA;
        return {base};
    }
    if (name == "fig3")
    {
        ScenarioConfig c = base;
        c.laser.henry_alpha = 6;
        c.laser.gain_compression = 30;
        c.pump.peak_to_peak = 11 * mA;
        c.noise.detector_rms = 0.25;
        c.interferometer.loss_short = 0;
        c.interferometer.loss_long = 0.1;
        std::vector<ScenarioConfig> runs;
        for (int bias_mA : {6, 7, 8, 9})
        {
            c.pump.bias = bias_mA * mA;
            c.name = "fig3_Ib" + std::to_string(bias_mA) + "mA";
            runs.push_back(c);
        }
        return runs;
    }
    if (name == "fig4")
    {
        ScenarioConfig c = preset_runs("fig2c").front();
        c.name = "fig4_unfiltered";
        ScenarioConfig f = c;
        f.name = "fig4_filtered";
        f.filter = BandpassFilter{};
        f.filter->center_detuning = fig4_filter_center_GHz * (two_pi * GHz);
        return {c, f};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

}  // namespace lpi
