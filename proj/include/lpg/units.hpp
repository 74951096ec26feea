#pragma once

#include <numbers>

namespace lpg {

inline constexpr double kStandardGravity = 9.81;  // m/s^2
inline constexpr double kBar = 1.0e5;             // Pa

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace lpg
