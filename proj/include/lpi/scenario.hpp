// SPDX-License-Identifier: Apache-2.0
//! \file scenario.hpp
//! Scenario configuration, presets, orchestration and result reporting.
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "histogram.hpp"
#include "interference.hpp"
#include "laser_dynamics.hpp"
#include "pulse_metrics.hpp"
#include "spectrum.hpp"

namespace lpi
{
//---------------------------------------------------------------------------//
// Configuration
//---------------------------------------------------------------------------//
struct OutputOptions
{
    bool emit_samples = false;
    bool emit_spectrum = true;
    bool emit_pulse = true;
};

struct ScenarioConfig
{
    std::string name = "custom";
    LaserParams laser;
    PumpTrain pump;
    SimGrid grid;
    InterferometerParams interferometer;
    NoiseModel noise;
    McConfig mc;
    std::size_t bins = default_bins;
    std::optional<BandpassFilter> filter;
    OutputOptions outputs;

    //! Laser and pump defaults with 0.05 detector noise.
    static ScenarioConfig defaults();

    //! Throws ValidationError naming the first violated invariant.
    void validate() const;
};

/*!
 * Parse the line-oriented config grammar.
 *
 * \code
 *   # comment
 *   [pump]
 *   bias_mA = 9          # same as "pump.bias_mA = 9" at top level
 * \endcode
 *
 * Keys use engineering units (mA, ps, ns, GHz, THz). Missing keys keep the
 * defaults; unknown or repeated keys and malformed lines raise ParseError
 * with line and column. The result is validated.
 */
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config_file(std::filesystem::path const& path);

//! Inverse of parse_config: every key, full precision.
std::string render_config(ScenarioConfig const& config);

//! Names accepted by preset_runs().
std::vector<std::string> preset_names();

/*!
 * Expand a named preset into its runs.
 *
 * fig2a/fig2b/fig2c are single runs, fig3 is the four-point bias sweep and
 * fig4 is the unfiltered/filtered pair. Throws InvalidArgument for unknown
 * names.
 */
std::vector<ScenarioConfig> preset_runs(std::string_view name);

//! Default filter detuning for the fig4 preset [GHz].
inline constexpr double fig4_filter_center_GHz = -20.0;

//---------------------------------------------------------------------------//
// Peak detection
//---------------------------------------------------------------------------//
struct Peak
{
    double location = 0;
    double height = 0;  //!< smoothed density
    double prominence = 0;
};

inline constexpr std::size_t peak_smoothing_window = 5;
inline constexpr double peak_min_prominence = 0.05;  //!< fraction of global max
inline constexpr std::size_t peak_min_bins = 16;

//! Moving average, window truncated and renormalized at the ends.
std::vector<double> smooth_density(std::vector<double> const& density, std::size_t window);

/*!
 * Local maxima of the smoothed density with topographic prominence at
 * least 5% of the smoothed global maximum, sorted by location.
 *
 * End bins count as maxima when they exceed their only neighbour. Returns
 * an empty list for histograms with fewer than 16 bins.
 */
std::vector<Peak> detect_peaks(Histogram const& hist);

//---------------------------------------------------------------------------//
// Orchestration
//---------------------------------------------------------------------------//
struct RunDiagnostics
{
    std::size_t negative_q_clamps = 0;
    std::size_t late_q_clamps = 0;
    std::size_t clamped_amplitudes = 0;
    std::size_t skipped_draws = 0;
};

struct RunTimings
{
    double dynamics = 0;
    double spectrum = 0;
    double monte_carlo = 0;
    double total = 0;
};

struct SpectrumSummary
{
    double centroid = 0;  //!< [rad/s]
    double rms_width = 0;  //!< [rad/s]
    double skewness = 0;
};

struct RunReport
{
    ScenarioConfig config;
    PulseWindow laser_pulse;  //!< as emitted by the laser
    PulseWindow pulse;  //!< entering the interferometer (filtered if configured)
    PulseSummary pulse_summary;  //!< of \c pulse
    std::optional<Spectrum> spectrum;  //!< of \c pulse
    std::optional<SpectrumSummary> spectrum_summary;
    std::optional<SpectrumSummary> laser_spectrum_summary;  //!< before filtering
    double filter_energy_transmission = 1;
    double delay_length = 0;  //!< [m]
    double arm_ratio = 1;
    SignalSamples samples;
    Histogram histogram;
    std::vector<Peak> peaks;
    RunDiagnostics diagnostics;
    RunTimings timings;  //!< wall clock; never written to output files

    bool bimodal() const { return peaks.size() == 2; }
};

/*!
 * Dynamics, optional filtering, Monte-Carlo and histogram for one run.
 *
 * Pure computation; use write_outputs to persist.
 */
RunReport run_scenario(ScenarioConfig const& config);

//! Dynamics plus spectrum only; no Monte-Carlo.
RunReport run_spectrum_only(ScenarioConfig const& config);

struct WrittenFiles
{
    std::vector<std::filesystem::path> paths;
};

/*!
 * Write <name>_histogram.csv, <name>_meta.json and, per OutputOptions,
 * <name>_pulse.csv, <name>_spectrum.csv and <name>_samples.csv.
 *
 * Contents are a pure function of the report minus its timings.
 */
WrittenFiles write_outputs(RunReport const& report, std::filesystem::path const& out_dir);

//! JSON sidecar text: config echo, pulse and spectrum summaries, peaks,
//! diagnostics.
std::string report_metadata_json(RunReport const& report);

//---------------------------------------------------------------------------//
// Oracle self-check
//---------------------------------------------------------------------------//
struct VerifyResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

//! Fast analytic-oracle checks of the numerical pipeline.
std::vector<VerifyResult> run_verification();

}  // namespace lpi
