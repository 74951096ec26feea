#include "lpg/ff_mechanics.hpp"

#include <cmath>
#include <string>

#include "lpg/errors.hpp"
#include "lpg/linkage.hpp"
#include "lpg/mh_mechanics.hpp"
#include "lpg/units.hpp"
#include "series_util.hpp"

namespace lpg::ff {

double arm_triangle_angle(double arm_deg) { return 180.0 - arm_deg; }

double ff_arm_cyl_length(const MachineParams& p, double arm_deg) {
    return law_of_cosines_side(p.l_joint_CD, p.l_joint_BC, arm_triangle_angle(arm_deg));
}

double ff_arm_torque(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double s = std::sin(deg_to_rad(-90.0 + boom_deg + arm_deg));
    const double w_tip = (p.m_bucket + load_kg) * p.g;
    const double w_arm = p.m_arm * p.g;
    return w_tip * p.L_arm * s + w_arm * p.L_arm / 2.0 * s;
}

double ff_arm_cyl_force_lift(const MachineParams& p, double boom_deg, double arm_deg, double load_kg) {
    const double s = std::sin(deg_to_rad(arm_triangle_angle(arm_deg)));
    if (std::abs(s) < 1e-6)
        throw GeometryError("forwarder arm cylinder force is singular at arm " + std::to_string(arm_deg) + " deg");
    return std::abs(ff_arm_torque(p, boom_deg, arm_deg, load_kg) / (p.l_joint_CD * s));
}

ComponentLoadSeries ff_arm_power(const MachineParams& p, const MotionProfile& arm_profile, double boom_deg,
                                 double load_kg, Direction direction) {
    auto lengths = detail::per_sample(arm_profile, [&](double arm) { return ff_arm_cyl_length(p, arm); });

    std::vector<double> forces;
    bool over_center = false;
    if (direction == Direction::lift) {
        forces = detail::per_sample(arm_profile, [&](double arm) {
            return ff_arm_cyl_force_lift(p, boom_deg, arm, load_kg);
        });
        for (const auto& s : arm_profile.samples)
            over_center = over_center || ff_arm_torque(p, boom_deg, s.position, load_kg) < 0.0;
    } else {
        forces.assign(arm_profile.samples.size(),
                      mh::cyl_force_lower(p.D_cyl_arm, p.D_rod_arm, p.p_lower, p.lowering_formula));
    }

    auto out = detail::cylinder_series(Component::arm, arm_profile, std::move(lengths), std::move(forces));
    out.over_center = over_center;
    return out;
}

}  // namespace lpg::ff
