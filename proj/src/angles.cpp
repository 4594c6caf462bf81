#include "angles.hpp"

#include <cmath>

namespace wisealice {

double canonical_angle(double deg)
{
    double r = std::fmod(deg, kHalfTurnDeg);
    if (r < 0.0)
        r += kHalfTurnDeg;
    // fmod of a tiny negative value plus 180 can round up to exactly 180.
    if (r >= kHalfTurnDeg)
        r -= kHalfTurnDeg;
    return r;
}

double wrapped_difference(double a, double b)
{
    return canonical_angle(a - b + 90.0) - 90.0;
}

double wrapped_distance(double a, double b)
{
    return std::abs(wrapped_difference(a, b));
}

} // namespace wisealice
