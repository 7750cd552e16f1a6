// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>

#include "lpi/analytic.hpp"
#include "lpi/error.hpp"
#include "lpi/spectrum.hpp"

using namespace lpi;
using constants::GHz;
using constants::ps;
using constants::two_pi;

namespace
{
ComplexFieldTrace gaussian_field(double alpha)
{
    GaussianPulse g;
    g.chirp_rate = chirp_rate(alpha, g.rms_width);
    return field_from_pulse(synthetic_pulse(g));
}

ComplexFieldTrace tone(double detuning, std::size_t n = 4096, double dt = 0.25 * ps)
{
    ComplexFieldTrace f;
    f.dt = dt;
    for (std::size_t i = 0; i < n; ++i)
    {
        double const t = (static_cast<double>(i) - static_cast<double>(n / 2)) * dt;
        f.times.push_back(t);
        f.amplitude.push_back(std::polar(1.0, detuning * t));
    }
    return f;
}
}  // namespace

TEST_CASE("field construction")
{
    GaussianPulse g;
    g.chirp_rate = chirp_rate(3, g.rms_width);
    PulseWindow w = synthetic_pulse(g);
    ComplexFieldTrace const f = field_from_pulse(w);
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(std::norm(f.amplitude[i]) == doctest::Approx(w.power[i]).epsilon(1e-12));

    for (double& p : w.phase)
        p += 1.3;
    ComplexFieldTrace const rotated = field_from_pulse(w);
    for (std::size_t i = 0; i < w.size(); i += 97)
    {
        auto const ratio = rotated.amplitude[i] / f.amplitude[i];
        if (std::abs(f.amplitude[i]) > 1e-6)
            CHECK(std::arg(ratio) == doctest::Approx(1.3).epsilon(1e-9));
    }
}

TEST_CASE("parseval")
{
    ComplexFieldTrace const f = gaussian_field(6);
    CHECK(spectral_energy(f) == doctest::Approx(field_energy(f)).epsilon(1e-10));
}

TEST_CASE("gaussian spectral widths")
{
    double const delta = GaussianPulse{}.rms_width;
    Spectrum const s0 = power_spectrum(gaussian_field(0));
    CHECK(spectral_rms_width(s0) == doctest::Approx(1 / (2 * delta)).epsilon(0.02));
    CHECK(std::abs(spectral_centroid(s0)) < 1e-6 * spectral_rms_width(s0));

    Spectrum const s6 = power_spectrum(gaussian_field(6));
    CHECK(spectral_rms_width(s6) / spectral_rms_width(s0) == doctest::Approx(std::sqrt(37.0)).epsilon(0.02));

    double sum = 0;
    for (double d : s6.density)
        sum += d;
    CHECK(sum == doctest::Approx(1).epsilon(1e-12));
    CHECK(s6.detunings.size() % 2 == 1);
    CHECK(s6.detunings.front() == doctest::Approx(-s6.detunings.back()));
}

TEST_CASE("time shift leaves the spectrum unchanged")
{
    GaussianPulse g;
    g.chirp_rate = chirp_rate(2, g.rms_width);
    PulseWindow const w = synthetic_pulse(g);
    PulseWindow shifted = w;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        shifted.power[i] = gaussian_power(w.times[i] - 30 * ps, g);
        shifted.phase[i] = linear_chirp_phase(w.times[i] - 30 * ps, g);
    }
    Spectrum const a = power_spectrum(field_from_pulse(w));
    Spectrum const b = power_spectrum(field_from_pulse(shifted));
    REQUIRE(a.density.size() == b.density.size());
    double worst = 0;
    for (std::size_t i = 0; i < a.density.size(); ++i)
        worst = std::max(worst, std::abs(a.density[i] - b.density[i]));
    CHECK(worst < 1e-9);
}

TEST_CASE("spectral moments")
{
    Spectrum s;
    s.detunings = {-2, -1, 0, 1, 2};
    s.density = {0, 0.5, 0, 0.5, 0};
    CHECK(spectral_centroid(s) == doctest::Approx(0));
    CHECK(spectral_rms_width(s) == doctest::Approx(1));
    s.density = {0.1, 0.2, 0.4, 0.2, 0.1};
    CHECK(spectral_centroid(s) == doctest::Approx(0));
    CHECK(spectral_skewness(s) == doctest::Approx(0));
    s.density = {0.0, 0.5, 0.3, 0.1, 0.1};
    CHECK(spectral_skewness(s) > 0);
}

TEST_CASE("nonuniform grid is rejected")
{
    ComplexFieldTrace f = gaussian_field(0);
    f.times[10] += 0.3 * f.dt;
    CHECK_THROWS_AS(power_spectrum(f), Error);
    CHECK_THROWS_AS(apply_filter(f, BandpassFilter{}), Error);
}

TEST_CASE("bandpass filter")
{
    BandpassFilter f;
    CHECK(f.amplitude_transfer(0) == 1);
    CHECK(f.amplitude_transfer(f.fwhm / 2) == doctest::Approx(std::sqrt(0.5)));
    CHECK(f.amplitude_transfer(-f.fwhm / 2) == doctest::Approx(std::sqrt(0.5)));
    BandpassFilter bad;
    bad.fwhm = 0;
    CHECK_THROWS_AS(bad.validate(), Error);

    SUBCASE("wide filter is the identity")
    {
        BandpassFilter wide;
        wide.fwhm = two_pi * 1e6 * GHz;
        ComplexFieldTrace const in = gaussian_field(6);
        ComplexFieldTrace const out = apply_filter(in, wide);
        double worst = 0;
        for (std::size_t i = 0; i < in.size(); ++i)
            worst = std::max(worst, std::abs(out.amplitude[i] - in.amplitude[i]));
        CHECK(worst < 1e-9 * std::sqrt(GaussianPulse{}.peak_power));
    }
    SUBCASE("a line at the centre passes unchanged")
    {
        std::size_t const n = 4096;
        double const dt = 0.25 * ps;
        // exactly on a transform bin
        double const detuning = two_pi * 40 / (static_cast<double>(n) * dt);
        BandpassFilter centred;
        centred.center_detuning = detuning;
        ComplexFieldTrace const in = tone(detuning, n, dt);
        ComplexFieldTrace const out = apply_filter(in, centred);
        CHECK(field_energy(out) / field_energy(in) == doctest::Approx(1).epsilon(1e-9));
        BandpassFilter away = centred;
        away.center_detuning = detuning + 3 * away.fwhm;
        CHECK(field_energy(apply_filter(in, away)) / field_energy(in) < 1e-9);
    }
    SUBCASE("filtered pulse")
    {
        GaussianPulse g;
        PulseWindow const w = synthetic_pulse(g);
        PulseWindow const back = filtered_pulse(apply_filter(field_from_pulse(w), BandpassFilter{}));
        CHECK(back.size() == w.size());
        CHECK(back.dt == w.dt);
        for (double p : back.power)
            CHECK(p >= 0);
        double const peak = *std::max_element(back.power.begin(), back.power.end());
        CHECK(peak == doctest::Approx(g.peak_power).epsilon(1e-3));
    }
}
