// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace lpi::constants
{
// CODATA 2018 exact / recommended values, SI units.
inline constexpr double reduced_planck = 1.054571817e-34;  // J s
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double light_speed_vacuum = 299792458.0;  // m / s

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Engineering-unit conversions used at the config and CLI boundary.
inline constexpr double ps = 1e-12;
inline constexpr double ns = 1e-9;
inline constexpr double mA = 1e-3;
inline constexpr double GHz = 1e9;
inline constexpr double THz = 1e12;
}  // namespace lpi::constants
