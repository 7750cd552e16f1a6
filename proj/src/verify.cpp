// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <string>

#include "lpi/analytic.hpp"
#include "lpi/constants.hpp"
#include "lpi/scenario.hpp"

namespace lpi
{
namespace
{
using constants::ps;
using constants::pi;
using constants::two_pi;

std::string fmt(char const* pattern, double a, double b)
{
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

VerifyResult check_chirpless_signal()
{
    GaussianPulse pulse;
    double worst = 0;
    for (double a2 : {0.0, 0.1})
    {
        InterferometerParams iface;
        iface.loss_long = a2;
        for (int k = 0; k < 16; ++k)
        {
            DrawSample d;
            d.phase_long = two_pi * k / 16.0;
            worst = std::max(worst, fringe_oracle_check(pulse, d, iface).relative_error);
        }
    }
    return {"chirpless_signal", worst <= 1e-3, fmt("max relative error %.3g (limit %.3g)", worst, 1e-3)};
}

VerifyResult check_chirped_visibility()
{
    GaussianPulse pulse;
    double const alpha = 6;
    pulse.chirp_rate = chirp_rate(alpha, pulse.rms_width);
    InterferometerParams const iface;
    double worst = 0;
    for (double f : {0.0, 0.25, 0.5, 1.0})
    {
        double const shift = f * pulse.rms_width;
        double const eta = numeric_visibility(pulse, shift, iface);
        worst = std::max(worst, std::abs(eta - visibility_chirped(shift, pulse.rms_width, alpha)));
    }
    return {"chirped_visibility", worst <= 0.01, fmt("max |eta - law| %.3g (limit %.3g)", worst, 0.01)};
}

VerifyResult check_jitter_amplification()
{
    double worst = 0;
    double const delta = 20 * ps;
    for (double alpha : {0.0, 1.0, 3.0, 6.0})
    {
        for (double f : {0.1, 0.5, 1.0, 2.0})
        {
            double const shift = f * delta;
            double const direct = visibility_chirped(shift, delta, alpha);
            double const amplified = visibility_chirpless(std::sqrt(1 + alpha * alpha) * shift, delta);
            worst = std::max(worst, std::abs(direct - amplified));
        }
    }
    return {"jitter_amplification", worst <= 1e-12, fmt("max deviation %.3g (limit %.3g)", worst, 1e-12)};
}

VerifyResult check_arcsine_normalization()
{
    // S = 2 - 2 cos u maps (0, pi) onto (0, 4) and removes the endpoint singularities.
    constexpr int n = 4000;
    double sum = 0;
    for (int i = 0; i < n; ++i)
    {
        double const u = (i + 0.5) * pi / n;
        sum += arcsine_density(2 - 2 * std::cos(u)) * 2 * std::sin(u);
    }
    sum *= pi / n;
    double const cdf_mid = arcsine_cdf(2.0);
    bool const ok = std::abs(sum - 1) <= 1e-6 && std::abs(cdf_mid - 0.5) <= 1e-12;
    return {"arcsine_normalization", ok, fmt("integral %.12g, F(2) = %.12g", sum, cdf_mid)};
}

VerifyResult check_delay_length()
{
    PumpTrain const pump;
    InterferometerParams const iface;
    double const length = delay_length(iface.pulses_in_delay, pump.modulation_freq, iface.group_index);
    bool const ok = std::abs(length - 1.28) <= 0.005 * 1.28;
    return {"delay_length", ok, fmt("%.6g m (expected %.6g m)", length, 1.28)};
}

VerifyResult check_photon_power()
{
    LaserParams const laser;
    double const factor = power_per_photon(laser);
    bool const ok = std::abs(factor - 1.60e-7) <= 0.01 * 1.60e-7;
    return {"photon_to_power", ok, fmt("%.6g W per photon (expected %.6g)", factor, 1.60e-7)};
}

VerifyResult check_gain_definitions()
{
    LaserParams const laser;
    double const at_threshold = linear_gain(laser.carrier_threshold, laser);
    double const at_transparency = linear_gain(laser.carrier_transparency, laser);
    double const compressed = saturated_gain(1.0, 1e-3, 25.0);
    bool const ok = std::abs(at_threshold - 1) <= 1e-14 && std::abs(at_transparency) <= 1e-14
                    && std::abs(compressed - 0.975) <= 1e-14;
    return {"gain_definitions", ok, fmt("G_L(N_th) = %.15g, G_L(N_0) = %.3g", at_threshold, at_transparency)};
}
}  // namespace

std::vector<VerifyResult> run_verification()
{
    return {check_chirpless_signal(),
            check_chirped_visibility(),
            check_jitter_amplification(),
            check_arcsine_normalization(),
            check_delay_length(),
            check_photon_power(),
            check_gain_definitions()};
}

}  // namespace lpi
