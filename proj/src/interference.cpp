// SPDX-License-Identifier: Apache-2.0
#include "lpi/interference.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "lpi/error.hpp"
#include "lpi/pulse_metrics.hpp"

namespace lpi
{
//---------------------------------------------------------------------------//
void InterferometerParams::validate() const
{
    require(coupler_short > 0 && coupler_short <= 0.25, "0 < T01 T10 <= 0.25");
    require(coupler_long > 0 && coupler_long <= 0.25, "0 < T02 T20 <= 0.25");
    require(loss_short >= 0 && loss_short < 1, "0 <= a1 < 1");
    require(loss_long >= 0 && loss_long < 1, "0 <= a2 < 1");
    require(pulses_in_delay >= 1, "N_p >= 1");
    require(fiber_index > 1, "n > 1");
    require(group_index > 1, "n_g > 1");
}

void NoiseModel::validate() const
{
    require(jitter_rms >= 0, "sigma_dt >= 0");
    require(amplitude_rms >= 0, "sigma_p >= 0");
    require(phase_rms >= 0, "sigma_phi >= 0");
    require(detector_rms >= 0, "sigma_zeta >= 0");
}

void McConfig::validate() const
{
    require(iterations >= 1, "iterations >= 1");
    require(std::isfinite(delta_theta), "delta_theta finite");
}

//---------------------------------------------------------------------------//
double arm_ratio(InterferometerParams const& params)
{
    return (1 - params.loss_long) * params.coupler_long
           / ((1 - params.loss_short) * params.coupler_short);
}

double delay_length(std::size_t pulses, double modulation_freq, double group_index,
                    double light_speed)
{
    require(pulses >= 1, "N_p >= 1");
    require(modulation_freq > 0, "omega_p > 0");
    return constants::pi * static_cast<double>(pulses) * light_speed
           / (modulation_freq * group_index);
}

DrawSample sample_draw(CounterRng& rng, NoiseModel const& noise)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    DrawSample d;
    d.shift = noise.jitter_rms * normal(rng);
    d.phase_short = noise.phase_rms * normal(rng);
    d.phase_long = noise.phase_rms * normal(rng);
    d.amp_short = 1 + noise.amplitude_rms * normal(rng);
    d.amp_long = 1 + noise.amplitude_rms * normal(rng);
    d.detector = noise.detector_rms * normal(rng);
    return d;
}

//---------------------------------------------------------------------------//
namespace
{
//! P and phi of the pulse evaluated at sample j - offset, edge-clamped.
inline void delayed_sample(PulseWindow const& pulse,
                           std::size_t j,
                           double offset,
                           double& power,
                           double& phase)
{
    std::size_t const n = pulse.size();
    double const x = static_cast<double>(j) - offset;
    if (x <= 0)
    {
        power = pulse.power.front();
        phase = pulse.phase.front();
        return;
    }
    if (x >= static_cast<double>(n - 1))
    {
        power = pulse.power.back();
        phase = pulse.phase.back();
        return;
    }
    double const fl = std::floor(x);
    auto const i0 = static_cast<std::size_t>(fl);
    double const f = x - fl;
    power = (1 - f) * pulse.power[i0] + f * pulse.power[i0 + 1];
    phase = (1 - f) * pulse.phase[i0] + f * pulse.phase[i0 + 1];
}

//! S at one sample: |sqrt(a1) e^{i phi1} + sqrt(a2) e^{i phi2}|^2 expanded.
inline double intensity(double short_power, double long_power, double phase_diff)
{
    return short_power + long_power
           + 2 * std::sqrt(short_power * long_power) * std::cos(phase_diff);
}

double check_shift(PulseWindow const& pulse, double shift)
{
    double const limit = pulse.span() / 4;
    if (!(std::abs(shift) < limit))
    {
        throw Error(ErrorKind::ShiftTooLarge,
                    "pulse overlap shift " + std::to_string(shift * 1e12)
                        + " ps exceeds a quarter of the window");
    }
    return limit;
}

double clamp_amplitude(double p) { return p < 0 ? 0.0 : p; }
}  // namespace

std::vector<double> pair_signal(PulseWindow const& pulse,
                                DrawSample const& draw,
                                InterferometerParams const& iface,
                                double delta_theta)
{
    check_shift(pulse, draw.shift);
    double const g1 = (1 - iface.loss_short) * iface.coupler_short * clamp_amplitude(draw.amp_short);
    double const g2 = (1 - iface.loss_long) * iface.coupler_long * clamp_amplitude(draw.amp_long);
    double const phase_offset = draw.phase_long - draw.phase_short + delta_theta;
    double const offset = draw.shift / pulse.dt;

    std::size_t const n = pulse.size();
    std::vector<double> trace(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        double p2, phi2;
        delayed_sample(pulse, j, offset, p2, phi2);
        trace[j] = intensity(g1 * pulse.power[j], g2 * p2, phi2 - pulse.phase[j] + phase_offset);
    }
    return trace;
}

double integral_signal(std::vector<double> const& trace,
                       PulseWindow const& pulse,
                       InterferometerParams const& iface)
{
    require(trace.size() == pulse.size(), "signal trace shares the pulse grid");
    double const denominator = (1 - iface.loss_short) * iface.coupler_short
                               * trapezoid(pulse.power, pulse.dt);
    if (!(denominator > 0))
        throw Error(ErrorKind::ZeroDenominator, "short-arm pulse energy is zero");
    return trapezoid(trace, pulse.dt) / denominator;
}

//---------------------------------------------------------------------------//
PairIntegrator::PairIntegrator(PulseWindow const& pulse, InterferometerParams const& iface)
    : pulse_(pulse)
    , short_gain_((1 - iface.loss_short) * iface.coupler_short)
    , long_gain_((1 - iface.loss_long) * iface.coupler_long)
    , denominator_(short_gain_ * trapezoid(pulse.power, pulse.dt))
    , shift_limit_(pulse.span() / 4)
{
    if (!(denominator_ > 0))
        throw Error(ErrorKind::ZeroDenominator, "short-arm pulse energy is zero");
}

double PairIntegrator::operator()(DrawSample const& draw, double delta_theta) const
{
    check_shift(pulse_, draw.shift);
    double const g1 = short_gain_ * clamp_amplitude(draw.amp_short);
    double const g2 = long_gain_ * clamp_amplitude(draw.amp_long);
    double const phase_offset = draw.phase_long - draw.phase_short + delta_theta;
    double const offset = draw.shift / pulse_.dt;

    std::size_t const n = pulse_.size();
    auto sample = [&](std::size_t j) {
        double p2, phi2;
        delayed_sample(pulse_, j, offset, p2, phi2);
        return intensity(g1 * pulse_.power[j], g2 * p2, phi2 - pulse_.phase[j] + phase_offset);
    };
    // Same accumulation order as trapezoid() over a materialized trace.
    double sum = 0.5 * (sample(0) + sample(n - 1));
    for (std::size_t j = 1; j + 1 < n; ++j)
        sum += sample(j);
    return sum * pulse_.dt / denominator_;
}

//---------------------------------------------------------------------------//
SignalSamples run_monte_carlo(PulseWindow const& pulse,
                              InterferometerParams const& iface,
                              NoiseModel const& noise,
                              McConfig const& config)
{
    pulse.validate();
    iface.validate();
    noise.validate();
    config.validate();

    PairIntegrator const integrate(pulse, iface);
    std::size_t const iterations = config.iterations;

    enum class Outcome : unsigned char
    {
        kept,
        skipped
    };
    std::vector<double> values(iterations, 0.0);
    std::vector<Outcome> outcome(iterations, Outcome::kept);
    std::vector<unsigned char> clamps(iterations, 0);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            CounterRng rng(config.seed, i);
            DrawSample const d = sample_draw(rng, noise);
            clamps[i] = static_cast<unsigned char>((d.amp_short < 0) + (d.amp_long < 0));
            if (!(std::abs(d.shift) < integrate.shift_limit()))
            {
                outcome[i] = Outcome::skipped;
                continue;
            }
            values[i] = add_detector_noise(integrate(d, config.delta_theta), d.detector);
        }
    };

    unsigned const workers = std::max(1u, std::min<unsigned>(
                                              config.threads, static_cast<unsigned>(iterations)));
    if (workers == 1)
    {
        work(0, iterations);
    }
    else
    {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        std::size_t const chunk = (iterations + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            std::size_t const begin = std::min(iterations, w * chunk);
            std::size_t const end = std::min(iterations, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try
                {
                    work(begin, end);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (auto const& e : errors)
        {
            if (e)
                std::rethrow_exception(e);
        }
    }

    SignalSamples out;
    out.config = config;
    out.noise = noise;
    out.values.reserve(iterations);
    for (std::size_t i = 0; i < iterations; ++i)
    {
        out.stats.clamped_amplitudes += clamps[i];
        if (outcome[i] == Outcome::skipped)
        {
            ++out.stats.skipped_draws;
            continue;
        }
        out.values.push_back(values[i]);
    }
    if (out.stats.skipped_draws > 0 && out.stats.skipped_draws * 1000 >= iterations)
    {
        throw Error(ErrorKind::ShiftTooLarge,
                    std::to_string(out.stats.skipped_draws) + " of " + std::to_string(iterations)
                        + " draws shifted beyond a quarter window (limit 0.1%)");
    }
    return out;
}

}  // namespace lpi
