#pragma once

#include "lpg/load_series.hpp"
#include "lpg/machine_params.hpp"
#include "lpg/motion_kinematics.hpp"

/// Forest-forwarder crane arm. Boom and slewing reuse the material-handler
/// kernels (lpg::mh) with the forwarder geometry; the cabin is left out of the
/// slewing inertia and bearing friction defaults to none.
namespace lpg::ff {

/// Included angle of the arm cylinder triangle: 180 - arm_deg.
double arm_triangle_angle(double arm_deg);

/// Arm cylinder length from l_joint_CD, l_joint_BC and the included angle.
double ff_arm_cyl_length(const MachineParams& p, double arm_deg);

/// Signed lifting moment about the arm joint, N*m. Negative means the arm is
/// past vertical (over centre).
double ff_arm_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Lifting force magnitude on the arm cylinder, N. Throws GeometryError when the
/// triangle angle's sine vanishes.
double ff_arm_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

ComponentLoadSeries ff_arm_power(const MachineParams& p, const MotionProfile& arm_profile, double boom_deg,
                                 double load_kg, Direction direction);

}  // namespace lpg::ff
