// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>

#include "lpi/constants.hpp"
#include "lpi/error.hpp"
#include "lpi/laser_dynamics.hpp"
#include "lpi/pulse_metrics.hpp"

using namespace lpi;
using constants::mA;
using constants::ps;

namespace
{
// Independent 2x2 Newton solve of dQ/dt = dN/dt = 0 at constant current.
LaserState steady_state(LaserParams const& p, double current)
{
    double const e = constants::electron_charge;
    double const k = p.quantum_output * constants::reduced_planck * p.carrier_angular_freq
                     / (2 * p.confinement * p.photon_lifetime);
    auto residual = [&](double q, double n) {
        double const gl = (n - p.carrier_transparency) / (p.carrier_threshold - p.carrier_transparency);
        double const g = gl * (1 - p.gain_compression * k * q);
        return std::array<double, 2>{
            (g - 1) * q / p.photon_lifetime + p.spontaneous_fraction * n / p.electron_lifetime,
            current / e - n / p.electron_lifetime - q * g / (p.confinement * p.photon_lifetime)};
    };
    double q = (current / e - p.carrier_threshold / p.electron_lifetime) * p.confinement * p.photon_lifetime;
    double n = p.carrier_threshold;
    for (int it = 0; it < 100; ++it)
    {
        auto const r = residual(q, n);
        double const hq = 1e-7 * q;
        double const hn = 1e-7 * n;
        auto const rq = residual(q + hq, n);
        auto const rn = residual(q, n + hn);
        double const a = (rq[0] - r[0]) / hq, b = (rn[0] - r[0]) / hn;
        double const c = (rq[1] - r[1]) / hq, d = (rn[1] - r[1]) / hn;
        double const det = a * d - b * c;
        q -= (d * r[0] - b * r[1]) / det;
        n -= (a * r[1] - c * r[0]) / det;
    }
    return {q, 0, n};
}

LaserParams chirped()
{
    LaserParams p;
    p.henry_alpha = 6;
    return p;
}
}  // namespace

TEST_CASE("gain definitions")
{
    LaserParams p;
    CHECK(linear_gain(p.carrier_threshold, p) == doctest::Approx(1).epsilon(1e-15));
    CHECK(linear_gain(p.carrier_transparency, p) == 0);
    CHECK(linear_gain(0.5 * p.carrier_transparency, p) < 0);
    CHECK(saturated_gain(0.8, 0.3, 0) == 0.8);
    CHECK(saturated_gain(1, 0.01, 25) == doctest::Approx(0.75));
    CHECK(saturated_gain(1.3, 0, 25) == 1.3);
}

TEST_CASE("photon to power")
{
    LaserParams p;
    CHECK(photon_to_power(0, p) == 0);
    CHECK(power_per_photon(p) == doctest::Approx(1.60e-7).epsilon(0.01));
    CHECK(photon_to_power(2e4, p) == doctest::Approx(2 * photon_to_power(1e4, p)));
}

TEST_CASE("pump current")
{
    PumpTrain t;
    double const period = t.period();
    CHECK(period == doctest::Approx(400 * ps));
    CHECK(pump_current(100 * ps, t) == doctest::Approx(17 * mA));
    CHECK(pump_current(300 * ps, t) == doctest::Approx(7 * mA));
    CHECK(pump_current(100 * ps + 3 * period, t) == doctest::Approx(17 * mA));
    CHECK(pump_current(-100 * ps, t) == doctest::Approx(7 * mA));
}

TEST_CASE("rate derivatives")
{
    LaserParams p = chirped();
    LaserState s{1e4, 0, p.carrier_threshold};
    CHECK(rate_derivatives(s, 10 * mA, p).phase == 0);

    LaserState empty{0, 0, 6e7};
    auto const d = rate_derivatives(empty, 10 * mA, p);
    CHECK(d.photons == doctest::Approx(p.spontaneous_fraction * 6e7 / p.electron_lifetime));
}

TEST_CASE("steady state is a fixed point")
{
    LaserParams p;
    p.gain_compression = 25;
    double const current = 17 * mA;
    LaserState const ss = steady_state(p, current);
    auto const d = rate_derivatives(ss, current, p);
    CHECK(std::abs(d.photons) * p.photon_lifetime / ss.photons < 1e-9);
    CHECK(std::abs(d.carriers) * p.electron_lifetime / ss.carriers < 1e-9);

    LaserState const next = rk4_step(ss, current, 0.05 * ps, p);
    CHECK(next.photons == doctest::Approx(ss.photons).epsilon(1e-12));
    CHECK(next.carriers == doctest::Approx(ss.carriers).epsilon(1e-12));
    CHECK(next.phase == 0);

    // One repetition period of steps drifts less than 1e-6.
    Trajectory const t = integrate_constant(p, current, 0.05 * ps, 8000, ss);
    CHECK(t.states.back().photons == doctest::Approx(ss.photons).epsilon(1e-6));
}

TEST_CASE("zero drive stays dark")
{
    LaserParams p;
    Trajectory const t = integrate_constant(p, 0, 0.05 * ps, 2000, LaserState{});
    for (auto const& s : t.states)
    {
        CHECK(s.photons == 0);
        CHECK(s.carriers == 0);
    }
}

TEST_CASE("constant drive converges to the steady state")
{
    LaserParams p;
    p.gain_compression = 25;
    double const current = 17 * mA;
    LaserState const ss = steady_state(p, current);
    PumpTrain train;
    Trajectory const t = integrate_constant(p, current, 0.05 * ps, 240000, default_initial_state(p, train));
    CHECK(t.states.size() == 240001);
    CHECK(t.states.back().photons == doctest::Approx(ss.photons).epsilon(1e-3));
    CHECK(t.states.back().carriers == doctest::Approx(ss.carriers).epsilon(1e-3));
}

TEST_CASE("fourth-order convergence below threshold")
{
    LaserParams p;
    LaserState const init = default_initial_state(p, PumpTrain{});
    auto final_photons = [&](double dt) {
        auto const steps = static_cast<std::size_t>(std::llround(400 * ps / dt));
        return integrate_constant(p, 8 * mA, dt, steps, init).states.back().photons;
    };
    double const a = final_photons(0.2 * ps);
    double const b = final_photons(0.1 * ps);
    double const c = final_photons(0.05 * ps);
    double const ratio = (a - b) / (b - c);
    CHECK(ratio == doctest::Approx(16).epsilon(0.1));
}

TEST_CASE("pulse energy self-convergence")
{
    LaserParams p;
    p.gain_compression = 25;
    PumpTrain train;
    SimGrid coarse;
    SimGrid fine = coarse;
    fine.dt = coarse.dt / 2;
    double const e1 = summarize_pulse(simulate_pulse(p, train, coarse)).energy;
    double const e2 = summarize_pulse(simulate_pulse(p, train, fine)).energy;
    CHECK(std::abs(e1 - e2) / e2 < 1e-4);
}

TEST_CASE("extracted window")
{
    LaserParams p;
    p.gain_compression = 25;
    PumpTrain train;
    SimGrid grid;
    Trajectory const t = integrate_trajectory(p, train, grid, default_initial_state(p, train));
    PulseWindow const last = extract_pulse(t, p, train, grid, 0);
    PulseWindow const prev = extract_pulse(t, p, train, grid, 1);

    CHECK(last.size() == static_cast<std::size_t>(std::llround(train.period() / grid.dt)));
    CHECK(last.times.front() == doctest::Approx(-train.period() / 2));
    double const e0 = trapezoid(last.power, last.dt);
    double const e1 = trapezoid(prev.power, prev.dt);
    CHECK(std::abs(e0 - e1) / e0 < 1e-3);
    for (double v : last.power)
        CHECK(v >= 0);

    // One bell-shaped lobe, no chirp.
    CHECK(count_local_maxima(last) == 1);
    for (double c : instantaneous_chirp(last))
        CHECK(c == 0);

    CHECK_THROWS_AS(extract_pulse(t, p, train, grid, 2), Error);
    SimGrid short_grid = grid;
    short_grid.total_periods = grid.warmup_periods;
    CHECK_THROWS_AS(simulate_pulse(p, train, short_grid), Error);
}

TEST_CASE("linear chirp of the gain-switched pulse")
{
    LaserParams p = chirped();
    PumpTrain train;
    PulseWindow const pulse = simulate_pulse(p, train, SimGrid{});
    GaussianFit const fit = fit_gaussian(pulse);
    double const expected = -p.henry_alpha / (2 * fit.rms_width * fit.rms_width);
    CHECK(chirp_slope_over_fwhm(pulse) == doctest::Approx(expected).epsilon(0.1));
}

TEST_CASE("chirp relaxes after the spike at 9 mA bias")
{
    LaserParams p = chirped();
    p.gain_compression = 25;
    PumpTrain train;
    train.bias = 9 * mA;
    PulseWindow const pulse = simulate_pulse(p, train, SimGrid{});
    std::vector<double> const chirp = instantaneous_chirp(pulse);
    HalfMaxRegion const r = half_max_region(pulse);
    std::size_t peak = r.first;
    for (std::size_t i = r.first; i <= r.last; ++i)
        if (pulse.power[i] > pulse.power[peak])
            peak = i;
    CHECK(std::abs(chirp[r.last]) < std::abs(chirp[peak]));
}

TEST_CASE("invalid parameters")
{
    LaserParams p;
    p.photon_lifetime = -1;
    CHECK_THROWS_AS(p.validate(), Error);
    SimGrid g;
    g.dt = 0.5 * ps;
    CHECK_THROWS_AS(g.validate(LaserParams{}), Error);
}
