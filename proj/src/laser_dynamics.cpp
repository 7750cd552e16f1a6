// SPDX-License-Identifier: Apache-2.0
#include "lpi/laser_dynamics.hpp"

#include <cmath>
#include <string>

#include "lpi/error.hpp"

namespace lpi
{
//---------------------------------------------------------------------------//
void LaserParams::validate() const
{
    require(carrier_transparency > 0, "N_0 > 0");
    require(carrier_threshold > carrier_transparency, "N_th > N_0");
    require(electron_lifetime > 0, "tau_e > 0");
    require(photon_lifetime > 0, "tau_ph > 0");
    require(confinement > 0 && confinement <= 1, "0 < Gamma <= 1");
    require(quantum_output > 0 && quantum_output <= 1, "0 < epsilon <= 1");
    require(spontaneous_fraction >= 0, "C_sp >= 0");
    require(gain_compression >= 0, "chi >= 0");
    require(carrier_angular_freq > 0, "omega_0 > 0");
    require(std::isfinite(henry_alpha), "alpha finite");
}

void PumpTrain::validate() const
{
    require(bias >= 0, "I_b >= 0");
    require(peak_to_peak >= 0, "I_p >= 0");
    require(modulation_freq > 0, "omega_p > 0");
    require(pulse_width > 0 && pulse_width < period(), "0 < w < T");
}

void SimGrid::validate(LaserParams const& laser) const
{
    require(dt > 0, "dt > 0");
    // Small slack so dt = tau_ph / 10 written in ps survives rounding.
    require(dt <= laser.photon_lifetime / 10 * (1 + 1e-12), "dt <= tau_ph / 10");
    require(warmup_periods >= 1, "n_periods_warmup >= 1");
    require(total_periods > warmup_periods, "n_periods_total > n_periods_warmup");
}

void PulseWindow::validate() const
{
    require(dt > 0, "pulse dt > 0");
    require(times.size() >= 64, "pulse window has >= 64 samples");
    require(power.size() == times.size() && phase.size() == times.size(),
            "pulse arrays have equal length");
    require(carriers.empty() || carriers.size() == times.size(),
            "pulse carrier array matches grid");
    for (std::size_t i = 1; i < times.size(); ++i)
    {
        require(std::abs(times[i] - times[i - 1] - dt) <= 1e-9 * dt,
                "pulse times uniformly spaced by dt");
    }
    for (double p : power)
    {
        require(p >= 0 && std::isfinite(p), "P >= 0 elementwise");
    }
}

//---------------------------------------------------------------------------//
double linear_gain(double carriers, LaserParams const& params)
{
    return (carriers - params.carrier_transparency)
           / (params.carrier_threshold - params.carrier_transparency);
}

double saturated_gain(double linear, double power, double compression)
{
    return linear * (1 - compression * power);
}

double power_per_photon(LaserParams const& params)
{
    return params.quantum_output * constants::reduced_planck * params.carrier_angular_freq
           / (2 * params.confinement * params.photon_lifetime);
}

double photon_to_power(double photons, LaserParams const& params)
{
    return photons * power_per_photon(params);
}

double pump_current(double t, PumpTrain const& train)
{
    double const period = train.period();
    double phase = std::fmod(t, period);
    if (phase < 0)
        phase += period;
    return phase < train.pulse_width ? train.bias + train.peak_to_peak : train.bias;
}

StateDerivative
rate_derivatives(LaserState const& state, double current, LaserParams const& params)
{
    double const tau_ph = params.photon_lifetime;
    double const tau_e = params.electron_lifetime;
    double const g_lin = linear_gain(state.carriers, params);
    double const gain = saturated_gain(
        g_lin, photon_to_power(state.photons, params), params.gain_compression);

    StateDerivative d;
    d.photons = (gain - 1) * state.photons / tau_ph
                + params.spontaneous_fraction * state.carriers / tau_e;
    d.phase = params.henry_alpha / (2 * tau_ph) * (g_lin - 1);
    d.carriers = current / constants::electron_charge - state.carriers / tau_e
                 - state.photons * gain / (params.confinement * tau_ph);
    return d;
}

namespace
{
LaserState advance(LaserState const& y, StateDerivative const& k, double h)
{
    return {y.photons + h * k.photons, y.phase + h * k.phase, y.carriers + h * k.carriers};
}

bool is_finite(LaserState const& s)
{
    return std::isfinite(s.photons) && std::isfinite(s.phase) && std::isfinite(s.carriers);
}

[[noreturn]] void throw_non_finite(std::size_t step)
{
    throw Error(ErrorKind::NonFiniteState,
                "non-finite laser state at step " + std::to_string(step)
                    + "; the integration step is too large");
}
}  // namespace

LaserState rk4_step(LaserState const& y, double current, double dt, LaserParams const& params)
{
    StateDerivative const k1 = rate_derivatives(y, current, params);
    StateDerivative const k2 = rate_derivatives(advance(y, k1, dt / 2), current, params);
    StateDerivative const k3 = rate_derivatives(advance(y, k2, dt / 2), current, params);
    StateDerivative const k4 = rate_derivatives(advance(y, k3, dt), current, params);

    LaserState out;
    out.photons = y.photons + dt / 6 * (k1.photons + 2 * k2.photons + 2 * k3.photons + k4.photons);
    out.phase = y.phase + dt / 6 * (k1.phase + 2 * k2.phase + 2 * k3.phase + k4.phase);
    out.carriers
        = y.carriers + dt / 6 * (k1.carriers + 2 * k2.carriers + 2 * k3.carriers + k4.carriers);
    return out;
}

LaserState default_initial_state(LaserParams const& params, PumpTrain const& train)
{
    LaserState s;
    s.carriers = train.bias * params.electron_lifetime / constants::electron_charge;
    s.photons = params.spontaneous_fraction * s.carriers * params.photon_lifetime
                / params.electron_lifetime;
    s.phase = 0;
    return s;
}

//---------------------------------------------------------------------------//
Trajectory integrate_trajectory(LaserParams const& params,
                                PumpTrain const& train,
                                SimGrid const& grid,
                                LaserState const& init)
{
    params.validate();
    train.validate();
    grid.validate(params);
    require(init.photons >= 0 && init.carriers >= 0, "initial Q >= 0 and N >= 0");

    double const dt = grid.dt;
    double const period = train.period();
    auto const steps = static_cast<std::size_t>(
        std::ceil(static_cast<double>(grid.total_periods) * period / dt - 1e-9));
    auto const first_period_steps = static_cast<std::size_t>(std::ceil(period / dt));

    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(steps + 1);
    traj.states.push_back(init);

    LaserState y = init;
    for (std::size_t k = 0; k < steps; ++k)
    {
        double const t_mid = (static_cast<double>(k) + 0.5) * dt;
        y = rk4_step(y, pump_current(t_mid, train), dt, params);
        if (!is_finite(y))
            throw_non_finite(k + 1);
        if (y.photons < 0)
        {
            y.photons = 0;
            ++traj.negative_clamps;
            if (k >= first_period_steps)
                ++traj.late_clamps;
        }
        traj.states.push_back(y);
    }
    return traj;
}

Trajectory integrate_constant(LaserParams const& params,
                              double current,
                              double dt,
                              std::size_t steps,
                              LaserState const& init)
{
    params.validate();
    require(dt > 0, "dt > 0");

    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(steps + 1);
    traj.states.push_back(init);
    LaserState y = init;
    for (std::size_t k = 0; k < steps; ++k)
    {
        y = rk4_step(y, current, dt, params);
        if (!is_finite(y))
            throw_non_finite(k + 1);
        if (y.photons < 0)
        {
            y.photons = 0;
            ++traj.negative_clamps;
        }
        traj.states.push_back(y);
    }
    return traj;
}

//---------------------------------------------------------------------------//
PulseWindow extract_pulse(Trajectory const& trajectory,
                          LaserParams const& params,
                          PumpTrain const& train,
                          SimGrid const& grid,
                          std::size_t periods_from_end)
{
    double const dt = trajectory.dt;
    double const period = train.period();
    auto const n = static_cast<std::size_t>(std::llround(period / dt));
    std::size_t const samples = trajectory.states.size();

    // Window for period k is centred on the pump pulse centre k T + w / 2.
    auto window_start = [&](std::size_t k) -> long long {
        double const t0 = static_cast<double>(k) * period + train.pulse_width / 2 - period / 2;
        return std::llround(t0 / dt);
    };

    std::size_t k = static_cast<std::size_t>(static_cast<double>(samples) * dt / period) + 1;
    while (k > 0 && window_start(k) + static_cast<long long>(n) > static_cast<long long>(samples))
        --k;
    if (k < periods_from_end + grid.warmup_periods
        || window_start(k - periods_from_end) < 0)
    {
        throw Error(ErrorKind::InsufficientWarmup,
                    "trajectory does not cover a full period after "
                        + std::to_string(grid.warmup_periods) + " warmup periods");
    }
    k -= periods_from_end;

    auto const start = static_cast<std::size_t>(window_start(k));
    PulseWindow pulse;
    pulse.dt = dt;
    pulse.times.resize(n);
    pulse.power.resize(n);
    pulse.phase.resize(n);
    pulse.carriers.resize(n);
    double const scale = power_per_photon(params);
    for (std::size_t i = 0; i < n; ++i)
    {
        LaserState const& s = trajectory.states[start + i];
        pulse.times[i] = -period / 2 + static_cast<double>(i) * dt;
        pulse.power[i] = s.photons * scale;
        pulse.phase[i] = s.phase;
        pulse.carriers[i] = s.carriers;
    }
    return pulse;
}

PulseWindow simulate_pulse(LaserParams const& params,
                           PumpTrain const& train,
                           SimGrid const& grid,
                           Trajectory* diagnostics)
{
    Trajectory traj
        = integrate_trajectory(params, train, grid, default_initial_state(params, train));
    PulseWindow pulse = extract_pulse(traj, params, train, grid);
    if (diagnostics)
    {
        diagnostics->dt = traj.dt;
        diagnostics->negative_clamps = traj.negative_clamps;
        diagnostics->late_clamps = traj.late_clamps;
    }
    return pulse;
}

std::vector<double> instantaneous_chirp(PulseWindow const& pulse)
{
    std::size_t const n = pulse.size();
    std::vector<double> chirp(n, 0.0);
    if (n < 2)
        return chirp;
    double const dt = pulse.dt;
    auto const& phi = pulse.phase;
    chirp.front() = (phi[1] - phi[0]) / dt;
    chirp.back() = (phi[n - 1] - phi[n - 2]) / dt;
    for (std::size_t i = 1; i + 1 < n; ++i)
        chirp[i] = (phi[i + 1] - phi[i - 1]) / (2 * dt);
    return chirp;
}

}  // namespace lpi
