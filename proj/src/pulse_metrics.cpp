// SPDX-License-Identifier: Apache-2.0
#include "lpi/pulse_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "lpi/error.hpp"

namespace lpi
{

double trapezoid(std::span<double const> values, double dt)
{
    if (values.size() < 2)
        return 0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        sum += values[i];
    return sum * dt;
}

HalfMaxRegion half_max_region(PulseWindow const& pulse)
{
    auto const& p = pulse.power;
    require(!p.empty(), "pulse is not empty");
    auto const peak_it = std::max_element(p.begin(), p.end());
    auto const peak = static_cast<std::size_t>(std::distance(p.begin(), peak_it));
    double const half = *peak_it / 2;

    HalfMaxRegion r;
    r.first = peak;
    r.last = peak;
    while (r.first > 0 && p[r.first - 1] >= half)
        --r.first;
    while (r.last + 1 < p.size() && p[r.last + 1] >= half)
        ++r.last;

    // Interpolate the crossings between the bracketing samples.
    double left = pulse.times[r.first];
    if (r.first > 0)
    {
        double const a = p[r.first - 1], b = p[r.first];
        left -= pulse.dt * (b - half) / (b - a);
    }
    double right = pulse.times[r.last];
    if (r.last + 1 < p.size())
    {
        double const a = p[r.last], b = p[r.last + 1];
        right += pulse.dt * (a - half) / (a - b);
    }
    r.width = right - left;
    return r;
}

GaussianFit fit_gaussian(PulseWindow const& pulse)
{
    HalfMaxRegion const region = half_max_region(pulse);
    require(region.last >= region.first + 2, "half-maximum region spans >= 3 samples");

    // Weighted normal equations for ln P = c0 + c1 u + c2 u^2, u = t - t_peak.
    std::size_t const peak_index = std::distance(
        pulse.power.begin(), std::max_element(pulse.power.begin(), pulse.power.end()));
    double const t_ref = pulse.times[peak_index];
    double m[3][4] = {};
    for (std::size_t i = region.first; i <= region.last; ++i)
    {
        double const p = pulse.power[i];
        double const u = pulse.times[i] - t_ref;
        double const w = p * p;
        double const y = std::log(p);
        double const basis[3] = {1.0, u, u * u};
        for (int r = 0; r < 3; ++r)
        {
            for (int c = 0; c < 3; ++c)
                m[r][c] += w * basis[r] * basis[c];
            m[r][3] += w * basis[r] * y;
        }
    }
    // Gauss-Jordan elimination with partial pivoting on the 3x4 system.
    for (int col = 0; col < 3; ++col)
    {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
        {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                pivot = r;
        }
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r)
        {
            if (r == col)
                continue;
            double const f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    double const c0 = m[0][3] / m[0][0];
    double const c1 = m[1][3] / m[1][1];
    double const c2 = m[2][3] / m[2][2];
    require(c2 < 0, "Gaussian fit has negative curvature in ln P");

    GaussianFit fit;
    fit.rms_width = std::sqrt(-1 / (2 * c2));
    double const shift = -c1 / (2 * c2);
    fit.center = t_ref + shift;
    fit.peak = std::exp(c0 - c1 * c1 / (4 * c2));
    return fit;
}

std::size_t count_local_maxima(PulseWindow const& pulse, double rel_floor)
{
    auto const& p = pulse.power;
    if (p.size() < 3)
        return 0;
    double const floor = rel_floor * *std::max_element(p.begin(), p.end());
    std::size_t count = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
    {
        if (p[i] > p[i - 1] && p[i] >= p[i + 1] && p[i] > floor)
            ++count;
    }
    return count;
}

double chirp_slope_over_fwhm(PulseWindow const& pulse)
{
    HalfMaxRegion const region = half_max_region(pulse);
    require(region.last > region.first, "half-maximum region spans >= 2 samples");
    std::vector<double> const chirp = instantaneous_chirp(pulse);

    double n = 0, st = 0, sy = 0;
    for (std::size_t i = region.first; i <= region.last; ++i)
    {
        n += 1;
        st += pulse.times[i];
        sy += chirp[i];
    }
    double const tm = st / n, ym = sy / n;
    double num = 0, den = 0;
    for (std::size_t i = region.first; i <= region.last; ++i)
    {
        double const dt = pulse.times[i] - tm;
        num += dt * (chirp[i] - ym);
        den += dt * dt;
    }
    return num / den;
}

PulseSummary summarize_pulse(PulseWindow const& pulse)
{
    PulseSummary s;
    s.energy = trapezoid(pulse.power, pulse.dt);
    auto const peak_it = std::max_element(pulse.power.begin(), pulse.power.end());
    s.peak_power = *peak_it;
    s.peak_time = pulse.times[std::distance(pulse.power.begin(), peak_it)];
    s.fwhm = half_max_region(pulse).width;
    s.fitted_rms_width = fit_gaussian(pulse).rms_width;
    s.local_maxima = count_local_maxima(pulse);
    return s;
}

}  // namespace lpi
