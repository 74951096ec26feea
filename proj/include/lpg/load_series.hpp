#pragma once

#include <vector>

namespace lpg {

enum class Component { boom, arm, swing, idle };

const char* to_string(Component c);

enum class Direction { lift, lower };

/// Actuator-side load of one task on the task's local time grid (t = 0 at task start).
///
/// Cylinders fill force_n and cylinder_velocity_m_s; the swing fills torque_nm.
/// Forces are magnitudes; torque keeps its sign so the accel/decel reversal is
/// visible. power_w is always the magnitude of actuator effort.
struct ComponentLoadSeries {
    Component component = Component::idle;
    std::vector<double> time_s;
    std::vector<double> force_n;
    std::vector<double> cylinder_velocity_m_s;
    std::vector<double> torque_nm;
    std::vector<double> power_w;
    /// Set when the gravity moment changed sign somewhere in the move.
    bool over_center = false;

    double peak_power() const;
    /// Trapezoidal integral of power over the local grid, J.
    double energy() const;
};

}  // namespace lpg
