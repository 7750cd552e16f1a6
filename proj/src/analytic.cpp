// SPDX-License-Identifier: Apache-2.0
#include "lpi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpi/error.hpp"

namespace lpi
{

double gaussian_power(double t, GaussianPulse const& pulse)
{
    double const x = t / pulse.rms_width;
    return pulse.peak_power * std::exp(-0.5 * x * x);
}

double linear_chirp_phase(double t, GaussianPulse const& pulse)
{
    return -0.5 * pulse.chirp_rate * t * t;
}

double chirp_rate(double alpha, double rms_width)
{
    require(rms_width > 0, "delta > 0");
    return alpha / (2 * rms_width * rms_width);
}

double fringe_signal(double s1, double s2, double visibility, double delta_phi)
{
    return s1 + s2 + 2 * visibility * std::sqrt(s1 * s2) * std::cos(delta_phi);
}

double visibility_chirpless(double shift, double rms_width)
{
    return std::exp(-shift * shift / (8 * rms_width * rms_width));
}

double visibility_chirped(double shift, double rms_width, double alpha)
{
    return std::exp(-(1 + alpha * alpha) * shift * shift / (8 * rms_width * rms_width));
}

double arcsine_density(double signal)
{
    if (!(signal > 0 && signal < 4))
    {
        throw Error(ErrorKind::DomainError,
                    "arcsine density is defined on (0, 4), got " + std::to_string(signal));
    }
    return 1 / (constants::pi * std::sqrt(signal * (4 - signal)));
}

double arcsine_cdf(double signal)
{
    if (signal <= 0)
        return 0;
    if (signal >= 4)
        return 1;
    return 2 / constants::pi * std::asin(std::sqrt(signal / 4));
}

PulseWindow synthetic_pulse(GaussianPulse const& pulse, double dt, double window)
{
    require(pulse.rms_width > 0, "delta > 0");
    require(pulse.peak_power > 0, "peak power > 0");
    require(dt > 0, "dt > 0");
    double const span = std::max(window, 10 * pulse.rms_width);
    auto n = static_cast<std::size_t>(std::llround(span / dt));
    n += n % 2;  // even, so t = 0 falls on sample n / 2

    PulseWindow w;
    w.dt = dt;
    w.times.resize(n);
    w.power.resize(n);
    w.phase.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double const t = (static_cast<double>(i) - static_cast<double>(n / 2)) * dt;
        w.times[i] = t;
        w.power[i] = gaussian_power(t, pulse);
        w.phase[i] = linear_chirp_phase(t, pulse);
    }
    return w;
}

OracleComparison fringe_oracle_check(GaussianPulse const& pulse,
                                  DrawSample const& draw,
                                  InterferometerParams const& iface,
                                  double delta_theta)
{
    PulseWindow const window = synthetic_pulse(pulse);

    OracleComparison c;
    c.numeric = integral_signal(pair_signal(window, draw, iface, delta_theta), window, iface);

    double const s1 = std::max(draw.amp_short, 0.0);
    double const s2 = arm_ratio(iface) * std::max(draw.amp_long, 0.0);
    double const alpha = 2 * pulse.chirp_rate * pulse.rms_width * pulse.rms_width;
    double const eta = visibility_chirped(draw.shift, pulse.rms_width, alpha);
    double const delta_phi = draw.phase_long - draw.phase_short + delta_theta;
    c.analytic = fringe_signal(s1, s2, eta, delta_phi);
    c.relative_error = std::abs(c.numeric - c.analytic) / (s1 + s2);
    return c;
}

double numeric_visibility(GaussianPulse const& pulse,
                          double shift,
                          InterferometerParams const& iface,
                          std::size_t phases)
{
    require(phases >= 2, "at least two phase samples");
    PulseWindow const window = synthetic_pulse(pulse);
    PairIntegrator const integrate(window, iface);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < phases; ++k)
    {
        DrawSample d;
        d.shift = shift;
        d.phase_long = constants::two_pi * static_cast<double>(k) / static_cast<double>(phases);
        double const s = integrate(d, 0.0);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return (hi - lo) / (4 * std::sqrt(arm_ratio(iface)));
}

}  // namespace lpi
