// SPDX-License-Identifier: Apache-2.0
//! \file pulse_metrics.hpp
//! Shape descriptors for extracted pulse windows.
#pragma once

#include <cstddef>
#include <span>

#include "laser_dynamics.hpp"

namespace lpi
{

//! Trapezoidal integral of uniformly spaced samples.
double trapezoid(std::span<double const> values, double dt);

//! Contiguous run of samples at or above half of the global maximum.
struct HalfMaxRegion
{
    std::size_t first = 0;
    std::size_t last = 0;  //!< inclusive
    double width = 0;  //!< FWHM [s], linearly interpolated at the crossings
};

HalfMaxRegion half_max_region(PulseWindow const& pulse);

struct GaussianFit
{
    double rms_width = 0;  //!< delta [s]
    double center = 0;  //!< [s]
    double peak = 0;  //!< [W]
};

/*!
 * Fit P(t) = A exp(-(t - t0)^2 / 2 delta^2) over the half-maximum region.
 *
 * Least squares on ln P weighted by P^2, which approximates a least-squares
 * fit on P itself while staying linear. Restricting to the main lobe keeps
 * the sub-threshold floor and relaxation tails out of the fit.
 */
GaussianFit fit_gaussian(PulseWindow const& pulse);

//! Number of strict local maxima of P above \c rel_floor times the peak.
std::size_t count_local_maxima(PulseWindow const& pulse, double rel_floor = 0.01);

//! Least-squares slope of d(Delta omega)/dt over the half-maximum region.
double chirp_slope_over_fwhm(PulseWindow const& pulse);

struct PulseSummary
{
    double energy = 0;  //!< [J]
    double peak_power = 0;  //!< [W]
    double peak_time = 0;  //!< [s]
    double fwhm = 0;  //!< [s]
    double fitted_rms_width = 0;  //!< [s]
    std::size_t local_maxima = 0;
};

PulseSummary summarize_pulse(PulseWindow const& pulse);

}  // namespace lpi
