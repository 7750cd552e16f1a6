// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lpi/error.hpp"
#include "lpi/scenario.hpp"

namespace lpi
{
namespace
{
using nlohmann::json;
using constants::GHz;
using constants::ps;
using constants::two_pi;

//! Spectrum CSV rows are limited to |detuning| <= 1 THz.
constexpr double spectrum_export_limit = 1000 * GHz;

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvFile
{
  public:
    CsvFile(std::filesystem::path path, char const* header) : path_(std::move(path))
    {
        out_.open(path_, std::ios::binary | std::ios::trunc);
        if (!out_)
            throw Error(ErrorKind::Io, "cannot write " + path_.string());
        out_ << header << '\n';
    }

    std::ofstream& stream() { return out_; }

    std::filesystem::path close()
    {
        out_.close();
        if (!out_)
            throw Error(ErrorKind::Io, "failed writing " + path_.string());
        return path_;
    }

  private:
    std::filesystem::path path_;
    std::ofstream out_;
};

json config_echo(ScenarioConfig const& config)
{
    json echo = json::object();
    std::istringstream lines(render_config(config));
    std::string line;
    while (std::getline(lines, line))
    {
        auto const eq = line.find(" = ");
        std::string const key = line.substr(0, eq);
        std::string const value = line.substr(eq + 3);
        char const* end = value.data() + value.size();
        std::uint64_t count = 0;
        double v = 0;
        if (auto const r = std::from_chars(value.data(), end, count);
            r.ec == std::errc() && r.ptr == end)
            echo[key] = count;
        else if (auto const r2 = std::from_chars(value.data(), end, v);
                 r2.ec == std::errc() && r2.ptr == end)
            echo[key] = v;
        else if (value == "true" || value == "false")
            echo[key] = value == "true";
        else
            echo[key] = value;
    }
    return echo;
}

json spectrum_json(SpectrumSummary const& s)
{
    return {{"centroid_GHz", s.centroid / (two_pi * GHz)},
            {"rms_width_GHz", s.rms_width / (two_pi * GHz)},
            {"skewness", s.skewness}};
}
}  // namespace

std::string report_metadata_json(RunReport const& report)
{
    json meta;
    meta["name"] = report.config.name;
    meta["config"] = config_echo(report.config);

    PulseSummary const& p = report.pulse_summary;
    meta["pulse"] = {{"energy_J", p.energy},
                     {"peak_power_W", p.peak_power},
                     {"peak_time_ps", p.peak_time / ps},
                     {"fwhm_ps", p.fwhm / ps},
                     {"fitted_rms_width_ps", p.fitted_rms_width / ps},
                     {"local_maxima", p.local_maxima},
                     {"samples", report.pulse.size()}};
    meta["interferometer"] = {{"arm_ratio", report.arm_ratio},
                              {"delay_length_m", report.delay_length}};
    if (report.spectrum_summary)
        meta["spectrum"] = spectrum_json(*report.spectrum_summary);
    if (report.config.filter)
    {
        meta["filter"] = {{"energy_transmission", report.filter_energy_transmission}};
        if (report.laser_spectrum_summary)
            meta["filter"]["unfiltered_spectrum"] = spectrum_json(*report.laser_spectrum_summary);
    }

    if (!report.samples.values.empty())
    {
        json peaks = json::array();
        for (Peak const& pk : report.peaks)
        {
            peaks.push_back(
                {{"location", pk.location}, {"height", pk.height}, {"prominence", pk.prominence}});
        }
        meta["histogram"] = {{"bins", report.histogram.bins()},
                             {"min", report.histogram.bin_edges.front()},
                             {"max", report.histogram.bin_edges.back()},
                             {"degenerate", report.histogram.degenerate},
                             {"samples", report.samples.values.size()}};
        meta["peaks"] = peaks;
        meta["bimodal"] = report.bimodal();
    }
    meta["diagnostics"] = {{"negative_q_clamps", report.diagnostics.negative_q_clamps},
                           {"late_q_clamps", report.diagnostics.late_q_clamps},
                           {"clamped_amplitudes", report.diagnostics.clamped_amplitudes},
                           {"skipped_draws", report.diagnostics.skipped_draws}};
    return meta.dump(2) + "\n";
}

WrittenFiles write_outputs(RunReport const& report, std::filesystem::path const& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw Error(ErrorKind::Io, "cannot create output directory " + out_dir.string());

    std::string const stem = report.config.name;
    WrittenFiles written;

    if (!report.samples.values.empty())
    {
        CsvFile csv(out_dir / (stem + "_histogram.csv"), "bin_left,bin_right,count,density");
        Histogram const& h = report.histogram;
        for (std::size_t i = 0; i < h.bins(); ++i)
        {
            csv.stream() << num(h.bin_edges[i]) << ',' << num(h.bin_edges[i + 1]) << ','
                         << h.counts[i] << ',' << num(h.density[i]) << '\n';
        }
        written.paths.push_back(csv.close());
    }

    if (report.config.outputs.emit_samples && !report.samples.values.empty())
    {
        CsvFile csv(out_dir / (stem + "_samples.csv"), "S");
        for (double v : report.samples.values)
            csv.stream() << num(v) << '\n';
        written.paths.push_back(csv.close());
    }

    if (report.config.outputs.emit_pulse)
    {
        CsvFile csv(out_dir / (stem + "_pulse.csv"), "time_ps,power_mW,phase_rad,chirp_GHz");
        std::vector<double> const chirp = instantaneous_chirp(report.pulse);
        for (std::size_t i = 0; i < report.pulse.size(); ++i)
        {
            csv.stream() << num(report.pulse.times[i] / ps) << ','
                         << num(report.pulse.power[i] * 1e3) << ',' << num(report.pulse.phase[i])
                         << ',' << num(chirp[i] / (two_pi * GHz)) << '\n';
        }
        written.paths.push_back(csv.close());
    }

    if (report.config.outputs.emit_spectrum && report.spectrum)
    {
        CsvFile csv(out_dir / (stem + "_spectrum.csv"), "detuning_GHz,density");
        Spectrum const& s = *report.spectrum;
        for (std::size_t i = 0; i < s.detunings.size(); ++i)
        {
            if (std::abs(s.detunings[i]) > two_pi * spectrum_export_limit)
                continue;
            csv.stream() << num(s.detunings[i] / (two_pi * GHz)) << ',' << num(s.density[i])
                         << '\n';
        }
        written.paths.push_back(csv.close());
    }

    {
        std::filesystem::path const path = out_dir / (stem + "_meta.json");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << report_metadata_json(report);
        out.close();
        if (!out)
            throw Error(ErrorKind::Io, "failed writing " + path.string());
        written.paths.push_back(path);
    }
    return written;
}

}  // namespace lpi
