#pragma once

#include <cmath>
#include <numbers>

namespace exh {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance on rho-values for "attains"/"dominates" decisions.
inline constexpr double kDefaultTol = 1e-9;
// Shortest arc accepted as a closed interval of positive length.
inline constexpr double kDefaultDeltaMin = 1e-6;

// Maps any finite angle into [0, 2pi).
inline double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

// Counter-clockwise distance from `from` to `to`, in [0, 2pi).
inline double ccw_distance(double from, double to) { return normalize_angle(to - from); }

}  // namespace exh
