#include "lpg/mh_mechanics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lpg/errors.hpp"
#include "lpg/linkage.hpp"
#include "lpg/units.hpp"
#include "series_util.hpp"

namespace lpg::mh {

namespace {

constexpr double kSingularSine = 1e-6;

std::string pose(double boom_deg, double arm_deg) {
    return "boom " + std::to_string(boom_deg) + " deg, arm " + std::to_string(arm_deg) + " deg";
}

double lowering_force(const MachineParams& p, Component c) {
    return c == Component::boom ? cyl_force_lower(p.D_cyl_boom, p.D_rod_boom, p.p_lower, p.lowering_formula)
                                : cyl_force_lower(p.D_cyl_arm, p.D_rod_arm, p.p_lower, p.lowering_formula);
}

}  // namespace

ComChain com_chain(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double th1 = deg_to_rad(boom_deg);
    // Absolute direction of the arm link: it leaves the boom tip folded back by arm_deg.
    const double arm_dir = deg_to_rad(boom_deg + 180.0 - arm_deg);

    ComChain c;
    c.x_boom = p.L_boom / 2.0 * std::cos(th1);
    c.x_arm = p.L_boom * std::cos(th1) + p.L_arm / 2.0 * std::cos(arm_dir);
    c.x_bucket = p.L_boom * std::cos(th1) + p.L_arm * std::cos(arm_dir);
    c.y_boom = p.L_boom / 2.0 * std::sin(th1);
    c.y_arm = p.L_boom * std::sin(th1) + p.L_arm / 2.0 * std::sin(arm_dir);
    c.y_bucket = p.L_boom * std::sin(th1) + p.L_arm * std::sin(arm_dir);

    const double m_tip = p.m_bucket + load_kg;
    c.m_arm_tot = p.m_arm + m_tip;
    c.x_arm_tot = c.m_arm_tot > 0.0 ? (p.m_arm * c.x_arm + m_tip * c.x_bucket) / c.m_arm_tot : c.x_arm;
    c.m_tot = p.m_boom + c.m_arm_tot;
    c.x_com = c.m_tot > 0.0 ? (p.m_boom * c.x_boom + c.m_arm_tot * c.x_arm_tot) / c.m_tot : 0.0;
    return c;
}

double boom_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const auto c = com_chain(p, boom_deg, arm_deg, load_kg);
    return c.m_tot * p.g * c.x_com;
}

BoomCylinderGeometry boom_cyl_geometry(const MachineParams& p, double boom_deg, double mount_angle_deg) {
    const double xc = p.mount_x();
    const double yc = p.mount_y();
    const double lab = p.l_joints_AB;

    const double dx = lab * std::cos(deg_to_rad(boom_deg)) - xc;
    const double dy = lab * std::sin(deg_to_rad(boom_deg)) - yc;
    const double length = std::hypot(dx, dy);
    if (length < 1e-12)
        throw GeometryError("boom cylinder mount coincides with the boom pin at boom " + std::to_string(boom_deg) +
                            " deg");

    // Ratio order (x over y) kept as in the source model; atan2 resolves the quadrant.
    const double num = lab * std::cos(deg_to_rad(mount_angle_deg)) - xc;
    const double den = lab * std::sin(deg_to_rad(mount_angle_deg)) - yc;
    return {rad_to_deg(std::atan2(num, den)), length};
}

BoomCylinderGeometry boom_cyl_geometry(const MachineParams& p, double boom_deg) {
    return boom_cyl_geometry(p, boom_deg, boom_deg);
}

double boom_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double mount_angle = p.mount_angle_source == MountAngleSource::boom ? boom_deg : arm_deg;
    const auto geo = boom_cyl_geometry(p, boom_deg, mount_angle);
    const double s = std::sin(deg_to_rad(geo.theta_c_deg - boom_deg));
    if (std::abs(s) < kSingularSine)
        throw GeometryError("boom cylinder force is singular (cylinder aligned with boom) at " +
                            pose(boom_deg, arm_deg));
    return std::abs(boom_torque(p, boom_deg, arm_deg, load_kg) / (p.l_joints_AB * s));
}

double cyl_force_lower(double D_cyl, double D_rod, double p_lower, LoweringFormula formula) {
    if (formula == LoweringFormula::annulus)
        return p_lower * std::numbers::pi / 4.0 * (D_cyl * D_cyl - D_rod * D_rod);
    const double gap = D_cyl - D_rod;
    return p_lower * std::numbers::pi / 2.0 * gap * gap;
}

ComponentLoadSeries boom_power(const MachineParams& p, const MotionProfile& boom_profile, double arm_deg,
                               double load_kg, Direction direction) {
    auto lengths = detail::per_sample(boom_profile, [&](double boom) { return boom_cyl_geometry(p, boom).length_m; });

    std::vector<double> forces;
    bool over_center = false;
    if (direction == Direction::lift) {
        forces = detail::per_sample(boom_profile, [&](double boom) {
            return boom_cyl_force_lift(p, boom, arm_deg, load_kg);
        });
        for (const auto& s : boom_profile.samples)
            over_center = over_center || boom_torque(p, s.position, arm_deg, load_kg) < 0.0;
    } else {
        forces.assign(boom_profile.samples.size(), lowering_force(p, Component::boom));
    }

    auto out = detail::cylinder_series(Component::boom, boom_profile, std::move(lengths), std::move(forces));
    out.over_center = over_center;
    return out;
}

double arm_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double alpha = deg_to_rad(-90.0 + arm_deg + boom_deg);
    const double s = std::sin(alpha);
    return (p.m_bucket + load_kg) * p.g * p.L_arm * s + p.m_arm * p.g * p.L_arm / 2.0 * s;
}

double arm_cyl_length(const MachineParams& p, double joint_deg) {
    return law_of_cosines_side(p.l_joints_BD, p.l_joints_DC, joint_deg);
}

double arm_cyl_beta(const MachineParams& p, double cylinder_length_m) {
    if (!(cylinder_length_m > 0.0))
        throw GeometryError("arm cylinder has zero length; the B-D-C triangle collapsed");
    return law_of_cosines_angle(cylinder_length_m, p.l_joints_DC, p.l_joints_BD);
}

double arm_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double beta = arm_cyl_beta(p, arm_cyl_length(p, arm_deg));
    const double s = std::sin(deg_to_rad(beta));
    if (std::abs(s) < kSingularSine)
        throw GeometryError("arm cylinder force is singular (beta = " + std::to_string(beta) + " deg) at " +
                            pose(boom_deg, arm_deg));
    return std::abs(arm_torque(p, boom_deg, arm_deg, load_kg) / (p.l_joints_DC * s));
}

ComponentLoadSeries arm_force_and_power(const MachineParams& p, double boom_deg, const MotionProfile& arm_profile,
                                        double load_kg, Direction direction) {
    auto lengths = detail::per_sample(arm_profile, [&](double arm) { return arm_cyl_length(p, arm); });

    std::vector<double> forces;
    bool over_center = false;
    if (direction == Direction::lift) {
        forces = detail::per_sample(arm_profile, [&](double arm) {
            return arm_cyl_force_lift(p, boom_deg, arm, load_kg);
        });
        for (const auto& s : arm_profile.samples)
            over_center = over_center || arm_torque(p, boom_deg, s.position, load_kg) < 0.0;
    } else {
        forces.assign(arm_profile.samples.size(), lowering_force(p, Component::arm));
    }

    auto out = detail::cylinder_series(Component::arm, arm_profile, std::move(lengths), std::move(forces));
    out.over_center = over_center;
    return out;
}

SwingInertia swing_inertia(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const auto c = com_chain(p, boom_deg, arm_deg, load_kg);
    SwingInertia i;
    if (p.include_cabin_inertia)
        i.I_cabin = p.m_cabin * (p.l_cabin * p.l_cabin + p.w_cabin * p.w_cabin) / 12.0;
    i.I_boom = p.m_boom * p.L_boom * p.L_boom / 3.0;

    const double r_arm_sq = c.x_arm * c.x_arm + c.y_arm * c.y_arm;
    const double r_tip_sq = c.x_bucket * c.x_bucket + c.y_bucket * c.y_bucket;
    i.I_arm = p.m_arm * p.L_arm * p.L_arm / 12.0 + p.m_arm * r_arm_sq + (p.m_bucket + load_kg) * r_tip_sq;
    i.I_total = i.I_cabin + i.I_boom + i.I_arm;
    return i;
}

ComponentLoadSeries swing_power(const MachineParams& p, const MotionProfile& rotation_profile, double boom_deg,
                                double arm_deg, double load_kg) {
    const double inertia = swing_inertia(p, boom_deg, arm_deg, load_kg).I_total;
    const double supported = p.m_cabin + p.m_boom + p.m_arm + p.m_bucket + load_kg;
    const double friction = p.bearing_friction.torque(supported, p.g);

    ComponentLoadSeries out;
    out.component = Component::swing;
    out.time_s = rotation_profile.times();
    out.torque_nm.reserve(rotation_profile.samples.size());
    out.power_w.reserve(rotation_profile.samples.size());
    for (const auto& s : rotation_profile.samples) {
        const double omega = deg_to_rad(s.velocity);
        const double omega_dot = deg_to_rad(s.acceleration);
        const double direction = omega > 0.0 ? 1.0 : (omega < 0.0 ? -1.0 : 0.0);
        const double torque = inertia * omega_dot + friction * direction;
        out.torque_nm.push_back(torque);
        out.power_w.push_back(std::abs(torque * omega));
    }
    return out;
}

}  // namespace lpg::mh
