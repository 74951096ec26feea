#pragma once

#include "lpg/load_series.hpp"
#include "lpg/machine_params.hpp"
#include "lpg/motion_kinematics.hpp"

/// Quasi-static material-handler mechanics: boom, arm and upper-carriage swing.
///
/// Angle conventions (degrees at the interface, radians inside):
///   boom_deg  angle between the boom and the base (horizontal),
///   arm_deg   angle between boom and arm; 180 means the arm continues the boom.
/// Coordinates are in the manipulator plane with the boom foot pin at the origin,
/// x horizontal (reach) and y vertical.
namespace lpg::mh {

/// Horizontal centre-of-mass chain plus the vertical analogues used by the swing
/// inertia. Attachment and task load are lumped at the arm tip.
struct ComChain {
    double x_boom = 0.0;
    double x_arm = 0.0;
    double x_bucket = 0.0;
    double x_arm_tot = 0.0;
    double x_com = 0.0;
    double y_boom = 0.0;
    double y_arm = 0.0;
    double y_bucket = 0.0;
    double m_arm_tot = 0.0;
    double m_tot = 0.0;
};

ComChain com_chain(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Gravity moment about the boom foot, N*m. Signed: negative when the combined
/// centre of mass sits behind the pivot.
double boom_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

struct BoomCylinderGeometry {
    double theta_c_deg = 0.0;  ///< cylinder attachment angle
    double length_m = 0.0;     ///< pin-to-mount length of the boom cylinder
};

/// `mount_angle_deg` feeds the attachment-angle ratio; the length always follows
/// the boom angle. Throws GeometryError when the mount coincides with the pin.
BoomCylinderGeometry boom_cyl_geometry(const MachineParams& p, double boom_deg, double mount_angle_deg);

/// Convenience overload using the boom angle for the attachment angle.
BoomCylinderGeometry boom_cyl_geometry(const MachineParams& p, double boom_deg);

/// Lifting force magnitude on the boom cylinder, N. Which joint feeds the
/// attachment angle follows p.mount_angle_source. Throws GeometryError when
/// |sin(theta_c - boom)| < 1e-6.
double boom_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Lowering force from the rod-side holding pressure, N.
double cyl_force_lower(double D_cyl, double D_rod, double p_lower, LoweringFormula formula = LoweringFormula::diameter_difference);

/// Boom cylinder load along a boom-angle profile with the arm held at arm_deg.
ComponentLoadSeries boom_power(const MachineParams& p, const MotionProfile& boom_profile, double arm_deg,
                               double load_kg, Direction direction);

/// Arm moment about the arm joint (signed), N*m.
double arm_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Arm cylinder length from the B-D-C triangle with included angle `joint_deg` at D.
double arm_cyl_length(const MachineParams& p, double joint_deg);

/// Angle at C between the arm cylinder and the D-C lever, degrees.
double arm_cyl_beta(const MachineParams& p, double cylinder_length_m);

/// Lifting force magnitude on the arm cylinder, N. Throws GeometryError when
/// |sin(beta)| < 1e-6.
double arm_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Arm cylinder load along an arm-angle profile with the boom held at boom_deg.
/// The arm triangle's included angle follows the moving arm angle.
ComponentLoadSeries arm_force_and_power(const MachineParams& p, double boom_deg, const MotionProfile& arm_profile,
                                        double load_kg, Direction direction);

/// Moments of inertia about the slewing axis, kg*m^2. I_arm carries the
/// attachment + load as a point mass at the tip radius.
struct SwingInertia {
    double I_cabin = 0.0;
    double I_boom = 0.0;
    double I_arm = 0.0;
    double I_total = 0.0;
};

SwingInertia swing_inertia(const MachineParams& p, double boom_deg, double arm_deg, double load_kg);

/// Slewing torque I*dw/dt plus bearing friction opposing the motion; power |M*w|.
ComponentLoadSeries swing_power(const MachineParams& p, const MotionProfile& rotation_profile, double boom_deg,
                                double arm_deg, double load_kg);

}  // namespace lpg::mh
