// SPDX-License-Identifier: Apache-2.0
//! \file analytic.hpp
//! Closed-form results for Gaussian pulses, used to cross-check the
//! numerical interference pipeline.
#pragma once

#include "interference.hpp"
#include "laser_dynamics.hpp"

namespace lpi
{

struct GaussianPulse
{
    double rms_width = 20e-12;  //!< delta [s]
    double peak_power = 1e-3;  //!< [W]
    double chirp_rate = 0;  //!< beta [rad/s^2], Delta omega(t) = -beta t
};

//! peak exp(-t^2 / 2 delta^2).
double gaussian_power(double t, GaussianPulse const& pulse);

//! -beta t^2 / 2.
double linear_chirp_phase(double t, GaussianPulse const& pulse);

//! beta = alpha / (2 delta^2).
double chirp_rate(double alpha, double rms_width);

//! s1 + s2 + 2 eta sqrt(s1 s2) cos(Delta Phi).
double fringe_signal(double s1, double s2, double visibility, double delta_phi);

//! exp(-dt^2 / 8 delta^2).
double visibility_chirpless(double shift, double rms_width);

//! exp(-(1 + alpha^2) dt^2 / 8 delta^2): jitter stretched by sqrt(1 + alpha^2).
double visibility_chirped(double shift, double rms_width, double alpha);

//! Density of 2 (1 + cos U) for U uniform; DomainError outside (0, 4).
double arcsine_density(double signal);

//! CDF of the same law, clamped to [0, 1] outside the support.
double arcsine_cdf(double signal);

//! Default synthetic grid: the simulation step and one 2.5 GHz period.
inline constexpr double synthetic_dt = 0.05e-12;
inline constexpr double synthetic_window = 400e-12;

/*!
 * Sample a (chirped) Gaussian onto a uniform window centred at t = 0.
 *
 * The window is widened to at least 10 delta so truncation stays below
 * 1e-6 of the pulse energy.
 */
PulseWindow synthetic_pulse(GaussianPulse const& pulse,
                            double dt = synthetic_dt,
                            double window = synthetic_window);

struct OracleComparison
{
    double numeric = 0;
    double analytic = 0;
    //! |numeric - analytic| / (s1 + s2), stable through destructive nulls.
    double relative_error = 0;
};

/*!
 * Push one draw through pair_signal and integral_signal on the synthetic
 * pulse and compare with the Gaussian closed form, s1 = p1, s2 = r p2 and
 * the visibility for alpha = 2 beta delta^2.
 */
OracleComparison fringe_oracle_check(GaussianPulse const& pulse,
                                  DrawSample const& draw,
                                  InterferometerParams const& iface,
                                  double delta_theta = 0);

/*!
 * Fringe visibility of the numerical pipeline at a fixed overlap shift:
 * (max - min) / (4 sqrt(s1 s2)) of S-hat over \c phases equally spaced
 * Delta Phi in [0, 2 pi), with p1 = p2 = 1.
 */
double numeric_visibility(GaussianPulse const& pulse,
                          double shift,
                          InterferometerParams const& iface,
                          std::size_t phases = 64);

}  // namespace lpi
