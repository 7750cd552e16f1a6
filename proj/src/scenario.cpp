// SPDX-License-Identifier: Apache-2.0
#include <chrono>

#include "lpi/scenario.hpp"

namespace lpi
{
namespace
{
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SpectrumSummary summarize(Spectrum const& s)
{
    return {spectral_centroid(s), spectral_rms_width(s), spectral_skewness(s)};
}

//! Shared front half: dynamics, spectra and optional filtering.
RunReport prepare(ScenarioConfig const& config)
{
    config.validate();
    auto const start = Clock::now();

    RunReport report;
    report.config = config;
    report.arm_ratio = arm_ratio(config.interferometer);
    report.delay_length = delay_length(config.interferometer.pulses_in_delay,
                                       config.pump.modulation_freq,
                                       config.interferometer.group_index);

    Trajectory diag;
    report.laser_pulse = simulate_pulse(config.laser, config.pump, config.grid, &diag);
    report.diagnostics.negative_q_clamps = diag.negative_clamps;
    report.diagnostics.late_q_clamps = diag.late_clamps;
    report.timings.dynamics = seconds_since(start);

    auto const spectrum_start = Clock::now();
    ComplexFieldTrace const field = field_from_pulse(report.laser_pulse);
    Spectrum const laser_spectrum = power_spectrum(field);
    report.laser_spectrum_summary = summarize(laser_spectrum);
    if (config.filter)
    {
        ComplexFieldTrace const filtered = apply_filter(field, *config.filter);
        report.pulse = filtered_pulse(filtered);
        report.filter_energy_transmission = field_energy(filtered) / field_energy(field);
        report.spectrum = power_spectrum(filtered);
        report.spectrum_summary = summarize(*report.spectrum);
    }
    else
    {
        report.pulse = report.laser_pulse;
        report.spectrum = laser_spectrum;
        report.spectrum_summary = report.laser_spectrum_summary;
    }
    report.timings.spectrum = seconds_since(spectrum_start);
    report.pulse_summary = summarize_pulse(report.pulse);
    return report;
}
}  // namespace

RunReport run_spectrum_only(ScenarioConfig const& config)
{
    auto const start = Clock::now();
    RunReport report = prepare(config);
    report.timings.total = seconds_since(start);
    return report;
}

RunReport run_scenario(ScenarioConfig const& config)
{
    auto const start = Clock::now();
    RunReport report = prepare(config);

    auto const mc_start = Clock::now();
    report.samples
        = run_monte_carlo(report.pulse, config.interferometer, config.noise, config.mc);
    report.timings.monte_carlo = seconds_since(mc_start);
    report.diagnostics.clamped_amplitudes = report.samples.stats.clamped_amplitudes;
    report.diagnostics.skipped_draws = report.samples.stats.skipped_draws;

    report.histogram = estimate_pdf(report.samples.values, config.bins);
    report.peaks = detect_peaks(report.histogram);
    report.timings.total = seconds_since(start);
    return report;
}

}  // namespace lpi
