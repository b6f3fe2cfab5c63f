#pragma once

#include <numbers>

// Unit conventions used throughout: time in microseconds, angular
// frequencies in rad/us, hbar = 1. A frequency of x rad/us equals
// 2*pi * (x / 2*pi) MHz, the unit used for reporting.

namespace lrpulse {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double to_two_pi_mhz(double rad_per_us) { return rad_per_us / kTwoPi; }
inline constexpr double from_two_pi_mhz(double two_pi_mhz) { return two_pi_mhz * kTwoPi; }

} // namespace lrpulse
