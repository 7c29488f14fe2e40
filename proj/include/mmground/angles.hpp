#ifndef MMGROUND_ANGLES_HPP
#define MMGROUND_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace mmground {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Wrap an angle in degrees to (-180, 180].
inline double wrap_deg(double deg) {
    double w = std::remainder(deg, 360.0);
    if (w <= -180.0) w += 360.0;
    return w;
}

// Wrap an angle in radians to (-pi, pi].
inline double wrap_rad(double rad) {
    double w = std::remainder(rad, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace mmground

#endif
