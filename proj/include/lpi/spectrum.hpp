// SPDX-License-Identifier: Apache-2.0
//! \file spectrum.hpp
//! Optical spectrum of the pulse field and DWDM-style bandpass filtering.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "constants.hpp"
#include "laser_dynamics.hpp"

namespace lpi
{

//! sqrt(P) exp(i phi) on the pulse grid; frequencies are relative to omega_0.
struct ComplexFieldTrace
{
    double dt = 0;
    std::vector<double> times;
    std::vector<std::complex<double>> amplitude;

    std::size_t size() const { return amplitude.size(); }
};

struct Spectrum
{
    std::vector<double> detunings;  //!< Omega = omega - omega_0 [rad/s], ascending
    std::vector<double> density;  //!< unit sum

    double resolution() const { return detunings.size() > 1 ? detunings[1] - detunings[0] : 0; }
};

/*!
 * Super-Gaussian bandpass with unit peak amplitude transmission.
 *
 * Power transmission is exp(-ln2 (2 (Omega - center) / fwhm)^(2 order)), so
 * the stated FWHM is the half-power bandwidth.
 */
struct BandpassFilter
{
    double center_detuning = 0;  //!< [rad/s]
    double fwhm = constants::two_pi * 100e9;  //!< [rad/s]
    unsigned shape_order = 4;

    //! Complex amplitude transfer at \c detuning (real, zero group delay).
    double amplitude_transfer(double detuning) const;
    void validate() const;
};

ComplexFieldTrace field_from_pulse(PulseWindow const& pulse);

//! sum |E|^2 dt over the trace.
double field_energy(ComplexFieldTrace const& field);

/*!
 * |DFT|^2 of the zero-padded field on a symmetric detuning grid.
 *
 * The transform length is the smallest odd 3-5-7-smooth integer at least
 * \c pad_factor times the trace length. Throws NonuniformGrid when the time
 * axis is not uniformly spaced by dt.
 */
Spectrum power_spectrum(ComplexFieldTrace const& field, std::size_t pad_factor = 4);

//! Unnormalized spectral energy sum |F_k|^2 dt^2 / (M dt), Parseval partner of field_energy.
double spectral_energy(ComplexFieldTrace const& field, std::size_t pad_factor = 4);

double spectral_centroid(Spectrum const& spectrum);
double spectral_rms_width(Spectrum const& spectrum);
//! Third standardized moment; positive for a high-frequency shoulder.
double spectral_skewness(Spectrum const& spectrum);

/*!
 * Filter the field in the frequency domain.
 *
 * Uses a transform of exactly one window length, i.e. circular filtering of
 * the periodic pulse train the window was cut from.
 */
ComplexFieldTrace apply_filter(ComplexFieldTrace const& field, BandpassFilter const& filter);

/*!
 * Back to P(t) and an unwrapped phi(t).
 *
 * Below 1e-9 of the peak power the phase is undefined and held at the last
 * valid value (the first valid value for leading samples).
 */
PulseWindow filtered_pulse(ComplexFieldTrace const& field);

}  // namespace lpi
