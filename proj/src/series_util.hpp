#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lpg/errors.hpp"
#include "lpg/load_series.hpp"
#include "lpg/motion_kinematics.hpp"

namespace lpg::detail {

/// Evaluate `f` at every profile sample; geometry errors are re-raised with the
/// offending sample time attached.
inline std::vector<double> per_sample(const MotionProfile& profile, const std::function<double(double)>& f) {
    std::vector<double> out;
    out.reserve(profile.samples.size());
    for (std::size_t k = 0; k < profile.samples.size(); ++k) {
        const auto& s = profile.samples[k];
        try {
            out.push_back(f(s.position));
        } catch (const GeometryError& e) {
            throw GeometryError(std::string(e.what()) + " (t = " + std::to_string(s.t) + " s, sample " +
                                std::to_string(k) + ")");
        }
    }
    return out;
}

/// Cylinder series from sampled cylinder lengths and force magnitudes: velocity
/// by numerical differentiation, power = F * |v|.
inline ComponentLoadSeries cylinder_series(Component component, const MotionProfile& profile,
                                           std::vector<double> lengths, std::vector<double> forces) {
    ComponentLoadSeries out;
    out.component = component;
    out.time_s = profile.times();
    out.cylinder_velocity_m_s = differentiate(std::span<const double>(lengths), std::span<const double>(out.time_s));
    out.force_n = std::move(forces);
    out.power_w.resize(out.time_s.size());
    for (std::size_t k = 0; k < out.power_w.size(); ++k)
        out.power_w[k] = out.force_n[k] * std::abs(out.cylinder_velocity_m_s[k]);
    return out;
}

}  // namespace lpg::detail
