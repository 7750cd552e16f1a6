// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lpi/analytic.hpp"
#include "lpi/pulse_metrics.hpp"

using namespace lpi;
using constants::ps;

TEST_CASE("trapezoid")
{
    std::vector<double> const v{1, 2, 3, 4};
    CHECK(trapezoid(v, 0.5) == doctest::Approx(3.75));
    CHECK(trapezoid(std::vector<double>{}, 1) == 0);
}

TEST_CASE("gaussian fit recovers the width")
{
    GaussianPulse g;
    g.rms_width = 17 * ps;
    PulseWindow const w = synthetic_pulse(g);
    GaussianFit const fit = fit_gaussian(w);
    CHECK(fit.rms_width == doctest::Approx(17 * ps).epsilon(1e-6));
    CHECK(std::abs(fit.center) < 1e-3 * ps);
    CHECK(fit.peak == doctest::Approx(g.peak_power).epsilon(1e-6));

    HalfMaxRegion const r = half_max_region(w);
    CHECK(r.width == doctest::Approx(2 * std::sqrt(2 * std::log(2.0)) * 17 * ps).epsilon(1e-4));
    CHECK(count_local_maxima(w) == 1);
}

TEST_CASE("chirp slope of a linear chirp")
{
    GaussianPulse g;
    g.chirp_rate = chirp_rate(6, g.rms_width);
    PulseWindow const w = synthetic_pulse(g);
    CHECK(chirp_slope_over_fwhm(w) == doctest::Approx(-g.chirp_rate).epsilon(1e-9));
}

TEST_CASE("two lobes")
{
    GaussianPulse g;
    PulseWindow w = synthetic_pulse(g);
    for (std::size_t i = 0; i < w.size(); ++i)
        w.power[i] += 0.5 * gaussian_power(w.times[i] - 80 * ps, g);
    CHECK(count_local_maxima(w) == 2);
    PulseSummary const s = summarize_pulse(w);
    CHECK(s.local_maxima == 2);
    CHECK(s.peak_time == doctest::Approx(0).epsilon(1e-15));
    CHECK(s.energy == doctest::Approx(1.5 * g.peak_power * g.rms_width * std::sqrt(2 * constants::pi)).epsilon(1e-9));
}
