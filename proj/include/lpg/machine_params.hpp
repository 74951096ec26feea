#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpg/units.hpp"

namespace lpg {

enum class MachineKind { material_handler, forest_forwarder };

const char* to_string(MachineKind k);
MachineKind machine_kind_from_string(const std::string& s);

/// Lowering cylinder force: the (pi/2)(D - d)^2 form the validated runs used,
/// or the standard rod-side annulus area (pi/4)(D^2 - d^2).
enum class LoweringFormula { diameter_difference, annulus };

const char* to_string(LoweringFormula f);
LoweringFormula lowering_formula_from_string(const std::string& s);

/// Which joint angle drives the numerator/denominator of the boom cylinder
/// attachment angle. The force equation pairs it with the boom angle, which is
/// the default.
enum class MountAngleSource { boom, arm };

struct BearingFriction {
    enum class Mode { none, constant_torque, coefficient };
    Mode mode = Mode::none;
    double torque_nm = 0.0;            // constant_torque
    double coefficient = 0.0;          // coefficient: mu
    double bearing_diameter_m = 0.0;   // coefficient: raceway diameter

    /// Friction torque magnitude for a given supported mass.
    double torque(double supported_mass_kg, double g) const;
};

const char* to_string(BearingFriction::Mode m);

/// Parses "none", "constant:<Nm>" or "coefficient:<mu>:<diameter_m>".
BearingFriction bearing_friction_from_string(const std::string& s);

struct AngleLimits {
    double min_deg = -360.0;
    double max_deg = 360.0;
    bool contains(double deg) const { return deg >= min_deg && deg <= max_deg; }
};

/// Scaling rule tags for param_scaling.
enum class ScalingRule { mass, length, fixed };

const char* to_string(ScalingRule r);
ScalingRule scaling_rule_from_string(const std::string& s);

/// Masses kg, lengths m, pressures Pa. The arm-linkage lengths differ per kind:
/// the material handler arm triangle uses l_joints_BD / l_joints_DC, the
/// forwarder uses l_joint_CD / l_joint_BC.
struct MachineParams {
    std::string name = "machine";
    MachineKind kind = MachineKind::material_handler;

    double m_vehicle = 0.0;
    double m_cabin = 0.0;
    double m_boom = 0.0;
    double m_arm = 0.0;
    double m_bucket = 0.0;  ///< grapple / attachment carried at the arm tip

    double L_boom = 0.0;
    double L_arm = 0.0;
    double l_cabin = 0.0;
    double w_cabin = 0.0;

    /// Boom cylinder mount. Either explicit coordinates or a diagonal offset z_c
    /// from which x_c = z_c/sqrt(2), y_c = -z_c/sqrt(2).
    std::optional<double> z_c;
    std::optional<double> x_c;
    std::optional<double> y_c;

    double l_joints_AB = 0.0;
    double l_joints_DC = 0.0;
    double l_joints_BD = 0.0;
    double l_joint_CD = 0.0;
    double l_joint_BC = 0.0;

    double D_cyl_boom = 0.0;
    double D_rod_boom = 0.0;
    double D_cyl_arm = 0.0;
    double D_rod_arm = 0.0;

    double p_lower = 2.5 * kBar;
    double g = kStandardGravity;

    BearingFriction bearing_friction;
    LoweringFormula lowering_formula = LoweringFormula::diameter_difference;
    MountAngleSource mount_angle_source = MountAngleSource::boom;
    bool include_cabin_inertia = true;
    double idle_power_w = 0.0;

    AngleLimits boom_limits{0.0, 90.0};
    AngleLimits arm_limits{0.0, 180.0};
    AngleLimits swing_limits{-360.0, 360.0};

    /// Pose assumed before the first task that moves a joint.
    double initial_boom_deg = 45.0;
    double initial_arm_deg = 90.0;

    /// Per-field scaling tags read from the machine file; missing entries fall
    /// back to default_scaling_rule().
    std::map<std::string, ScalingRule> scaling_rules;

    double mount_x() const;
    double mount_y() const;
};

/// Throws ValidationError listing every violated invariant.
void validate(const MachineParams& p);

/// Names of the numeric fields that take part in scaling, in file order.
const std::vector<std::string>& scalable_fields();

/// Default tag: masses scale with vehicle mass, lengths and diameters with its cube root.
ScalingRule default_scaling_rule(const std::string& field);

/// Access a scalable numeric field by name. Unset optional mount fields read as nullopt.
std::optional<double> get_field(const MachineParams& p, const std::string& field);
void set_field(MachineParams& p, const std::string& field, double value);

/// Machine document I/O (JSON). Unknown keys are rejected.
MachineParams parse_machine(const std::string& text);
MachineParams load_machine(const std::string& path);
std::string serialize_machine(const MachineParams& p);

}  // namespace lpg
