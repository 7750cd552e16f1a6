// SPDX-License-Identifier: Apache-2.0
//! \file interference.hpp
//! Pairwise pulse interference in an unbalanced Michelson interferometer and
//! the Monte-Carlo estimate of the integral-signal distribution.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "constants.hpp"
#include "laser_dynamics.hpp"
#include "rng.hpp"

namespace lpi
{
//---------------------------------------------------------------------------//
struct InterferometerParams
{
    double coupler_short = 0.25;  //!< T01 T10, round trip through the short arm
    double coupler_long = 0.25;  //!< T02 T20
    double loss_short = 0.0;  //!< a1
    double loss_long = 0.0;  //!< a2
    std::size_t pulses_in_delay = 32;  //!< N_p
    double fiber_index = 1.45;  //!< n
    double group_index = 1.5;  //!< n_g

    void validate() const;
};

struct NoiseModel
{
    double jitter_rms = 10e-12;  //!< sigma_dt [s]
    double amplitude_rms = 0.05;  //!< sigma_p
    double phase_rms = constants::two_pi;  //!< sigma_phi [rad]
    double detector_rms = 0.0;  //!< sigma_zeta, units of normalized S

    void validate() const;
};

//! One realization of the six independent random variables of a pulse pair.
struct DrawSample
{
    double shift = 0;  //!< Delta t [s]
    double phase_short = 0;  //!< phi_p1
    double phase_long = 0;  //!< phi_p2
    double amp_short = 1;  //!< p1
    double amp_long = 1;  //!< p2
    double detector = 0;  //!< zeta
};

struct McConfig
{
    std::size_t iterations = 100000;
    std::uint64_t seed = 1;
    double delta_theta = 0;  //!< fixed interferometer phase theta2 - theta1
    unsigned threads = 1;  //!< worker count; never changes the result

    void validate() const;
};

struct DrawStatistics
{
    std::size_t clamped_amplitudes = 0;  //!< p draws < 0 set to 0
    std::size_t skipped_draws = 0;  //!< |Delta t| >= T/4
};

struct SignalSamples
{
    std::vector<double> values;  //!< S-hat per kept iteration, in order
    McConfig config;
    NoiseModel noise;
    DrawStatistics stats;
};

//---------------------------------------------------------------------------//
//! r = (1 - a2) T02 T20 / ((1 - a1) T01 T10).
double arm_ratio(InterferometerParams const& params);

//! Delay-line length Delta L = pi N_p c / (omega_p n_g).
double delay_length(std::size_t pulses, double modulation_freq, double group_index,
                    double light_speed = constants::light_speed_vacuum);

/*!
 * Draw (Delta t, phi_p1, phi_p2, p1, p2, zeta) in that order from \c rng.
 *
 * All six are independent normals; p1 and p2 are never merged into one
 * variable. Negative amplitudes are returned as drawn; callers clamp.
 */
DrawSample sample_draw(CounterRng& rng, NoiseModel const& noise);

/*!
 * Interference intensity S(t) of a short-arm pulse and a long-arm pulse
 * delayed by Delta t.
 *
 * The delayed copy of P and phi is linearly interpolated onto the window
 * grid; samples that fall outside the window take the edge values. Only
 * theta2 - theta1 enters, and there is no exp(i omega_0 Delta t) factor.
 * Throws ShiftTooLarge for |Delta t| >= T/4.
 */
std::vector<double> pair_signal(PulseWindow const& pulse,
                                DrawSample const& draw,
                                InterferometerParams const& iface,
                                double delta_theta);

//! Trapezoidal integral of S over the unfluctuated short-arm energy.
double integral_signal(std::vector<double> const& trace,
                       PulseWindow const& pulse,
                       InterferometerParams const& iface);

inline double add_detector_noise(double signal, double zeta) { return signal + zeta; }

/*!
 * Fused pair_signal + integral_signal for the Monte-Carlo hot loop.
 *
 * Bitwise independent of the caller's thread; matches the two-step route to
 * rounding.
 */
class PairIntegrator
{
  public:
    PairIntegrator(PulseWindow const& pulse, InterferometerParams const& iface);

    //! Normalized integral signal without detector noise.
    double operator()(DrawSample const& draw, double delta_theta) const;

    double shift_limit() const { return shift_limit_; }

  private:
    PulseWindow const& pulse_;
    double short_gain_;
    double long_gain_;
    double denominator_;
    double shift_limit_;
};

/*!
 * Run \c config.iterations independent draws through the interference,
 * integration and detector-noise stages.
 *
 * Iteration i draws from CounterRng(seed, i). Draws with |Delta t| >= T/4
 * are skipped and counted when they are fewer than 0.1% of iterations;
 * otherwise ShiftTooLarge is rethrown.
 */
SignalSamples run_monte_carlo(PulseWindow const& pulse,
                              InterferometerParams const& iface,
                              NoiseModel const& noise,
                              McConfig const& config);

}  // namespace lpi
