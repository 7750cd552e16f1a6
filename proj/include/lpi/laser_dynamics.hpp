// SPDX-License-Identifier: Apache-2.0
//! \file laser_dynamics.hpp
//! Single-mode rate equations for a gain-switched semiconductor laser.
#pragma once

#include <cstddef>
#include <vector>

#include "constants.hpp"

namespace lpi
{
//---------------------------------------------------------------------------//
/*!
 * Physical constants of the laser, SI units.
 *
 * Defaults are the common simulation set used throughout this project; the
 * Henry factor, gain compression and carrier frequency change per scenario.
 */
struct LaserParams
{
    double carrier_threshold = 6.5e7;  //!< N_th
    double carrier_transparency = 5.0e7;  //!< N_0
    double spontaneous_fraction = 1e-5;  //!< C_sp
    double confinement = 0.12;  //!< Gamma
    double quantum_output = 0.3;  //!< differential quantum output epsilon
    double electron_lifetime = 1.0e-9;  //!< tau_e [s]
    double photon_lifetime = 1.0e-12;  //!< tau_ph [s]
    double henry_alpha = 0.0;  //!< linewidth enhancement factor
    double gain_compression = 0.0;  //!< chi [1/W]
    double carrier_angular_freq = constants::two_pi * 193.63e12;  //!< omega_0

    //! Throws ValidationError naming the first violated invariant.
    void validate() const;
};

//! Rectangular pump current train I(t) = I_b + I_p inside each pulse.
struct PumpTrain
{
    double bias = 7e-3;  //!< I_b [A]
    double peak_to_peak = 10e-3;  //!< I_p [A]
    double pulse_width = 200e-12;  //!< w [s]
    double modulation_freq = constants::two_pi * 2.5e9;  //!< omega_p [rad/s]

    double period() const { return constants::two_pi / modulation_freq; }
    void validate() const;
};

struct LaserState
{
    double photons = 0;  //!< Q
    double phase = 0;  //!< phi [rad], unwrapped
    double carriers = 0;  //!< N
};

struct StateDerivative
{
    double photons = 0;
    double phase = 0;
    double carriers = 0;
};

struct SimGrid
{
    double dt = 0.05e-12;
    std::size_t warmup_periods = 50;
    std::size_t total_periods = 52;

    //! Needs the laser for the dt <= tau_ph / 10 bound.
    void validate(LaserParams const& laser) const;
};

//! Integrated trajectory sampled at t_k = k * dt, k = 0 .. steps.
struct Trajectory
{
    double dt = 0;
    std::vector<LaserState> states;
    std::size_t negative_clamps = 0;  //!< all Q < 0 clamps
    std::size_t late_clamps = 0;  //!< clamps after the first period
};

/*!
 * One repetition period of the steady regime on a uniform grid.
 *
 * Times run from -T/2 in steps of dt with the pump pulse centred at t = 0.
 */
struct PulseWindow
{
    double dt = 0;
    std::vector<double> times;
    std::vector<double> power;  //!< P [W]
    std::vector<double> phase;  //!< phi [rad]
    std::vector<double> carriers;  //!< N

    std::size_t size() const { return times.size(); }
    double span() const { return dt * static_cast<double>(size()); }

    //! Throws ValidationError if the window invariants do not hold.
    void validate() const;
};

//---------------------------------------------------------------------------//
// Rate-equation building blocks
//---------------------------------------------------------------------------//

//! G_L = (N - N_0) / (N_th - N_0); negative below transparency.
double linear_gain(double carriers, LaserParams const& params);

//! G = G_L (1 - chi P).
double saturated_gain(double linear, double power, double compression);

//! P = Q eps hbar omega_0 / (2 Gamma tau_ph).
double photon_to_power(double photons, LaserParams const& params);

//! Watts per unit photon number.
double power_per_photon(LaserParams const& params);

double pump_current(double t, PumpTrain const& train);

/*!
 * Right-hand side of the rate equations.
 *
 * The photon and carrier equations use the compressed gain G while the
 * phase equation is driven by the linear gain G_L.
 */
StateDerivative
rate_derivatives(LaserState const& state, double current, LaserParams const& params);

//! Classical RK4 step with the current held fixed over the step.
LaserState rk4_step(LaserState const& state,
                    double current,
                    double dt,
                    LaserParams const& params);

//! Below-threshold carrier balance, spontaneously seeded photon number.
LaserState default_initial_state(LaserParams const& params, PumpTrain const& train);

/*!
 * Integrate total_periods repetition periods with fixed-step RK4.
 *
 * The pump is sampled at each step midpoint, so pulse edges snap to the
 * grid. Negative photon numbers are clamped to zero and counted. Throws
 * NonFiniteState if any state component becomes non-finite.
 */
Trajectory integrate_trajectory(LaserParams const& params,
                                PumpTrain const& train,
                                SimGrid const& grid,
                                LaserState const& init);

//! Integrate with a constant current over \c steps steps (oracle support).
Trajectory integrate_constant(LaserParams const& params,
                              double current,
                              double dt,
                              std::size_t steps,
                              LaserState const& init);

/*!
 * Cut out a full period after warmup, re-centred on the pump pulse.
 *
 * \c periods_from_end selects which period: 0 is the last full window the
 * trajectory covers, 1 the one before it, and so on. Throws
 * InsufficientWarmup when the selected window starts before the warmup.
 */
PulseWindow extract_pulse(Trajectory const& trajectory,
                          LaserParams const& params,
                          PumpTrain const& train,
                          SimGrid const& grid,
                          std::size_t periods_from_end = 0);

//! Integrate from the default initial state and extract the last period.
PulseWindow simulate_pulse(LaserParams const& params,
                           PumpTrain const& train,
                           SimGrid const& grid,
                           Trajectory* diagnostics = nullptr);

//! Delta-omega(t) = d phi / dt; central differences, one-sided at the ends.
std::vector<double> instantaneous_chirp(PulseWindow const& pulse);

}  // namespace lpi
