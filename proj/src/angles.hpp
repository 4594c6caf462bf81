#pragma once

#include <numbers>

// All public angles are in degrees. Strategy angles live on the circle
// [0, 180): the state vectors v and -v describe the same strategy.
namespace wisealice {

inline constexpr double kHalfTurnDeg = 180.0;

constexpr double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Reduce an angle into [0, 180).
double canonical_angle(double deg);

/// Signed difference a - b reduced into [-90, 90).
double wrapped_difference(double a, double b);

/// |wrapped_difference(a, b)|, a metric on the 180-degree circle.
double wrapped_distance(double a, double b);

} // namespace wisealice
