#include "lpg/load_aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpg/errors.hpp"
#include "lpg/ff_mechanics.hpp"
#include "lpg/mh_mechanics.hpp"

namespace lpg {

namespace {

Component component_of(TaskKind k) {
    switch (joint_of(k)) {
        case Joint::boom: return Component::boom;
        case Joint::arm: return Component::arm;
        case Joint::swing: return Component::swing;
        case Joint::none: return Component::idle;
    }
    return Component::idle;
}

std::string task_label(const ScheduledTask& t) {
    std::string s = std::string("task '") + to_string(t.spec.task) + "' (entry " + std::to_string(t.source_index);
    if (t.spec.task_repeats > 1) s += ", repeat " + std::to_string(t.repeat_index);
    return s + ", start " + std::to_string(t.start_s) + " s)";
}

TaskSimulation run(const ScheduledTask& task, const MachineParams& params, const Pose& fallback) {
    const auto& spec = task.spec;
    const Direction direction = is_lowering(spec.task) ? Direction::lower : Direction::lift;

    TaskSimulation sim;
    sim.boom_deg = fallback.boom_deg;
    sim.arm_deg = fallback.arm_deg;

    if (spec.task == TaskKind::wait) {
        sim.load.component = Component::idle;
        sim.load.time_s = sample_times(spec.duration, task.dt_s);
        sim.load.power_w.assign(sim.load.time_s.size(), params.idle_power_w);
        return sim;
    }

    const auto profile = make_profile(motion_request(spec, task.dt_s));
    switch (joint_of(spec.task)) {
        case Joint::boom:
            sim.boom_deg = *spec.value_ini;
            sim.arm_deg = spec.arm_fin_ang.value_or(fallback.arm_deg);
            sim.load = mh::boom_power(params, profile, sim.arm_deg, spec.load, direction);
            break;
        case Joint::arm:
            sim.boom_deg = spec.boom_fin_ang.value_or(fallback.boom_deg);
            sim.arm_deg = *spec.value_ini;
            sim.load = params.kind == MachineKind::material_handler
                           ? mh::arm_force_and_power(params, sim.boom_deg, profile, spec.load, direction)
                           : ff::ff_arm_power(params, profile, sim.boom_deg, spec.load, direction);
            break;
        case Joint::swing:
            sim.boom_deg = spec.ang_boom.value_or(fallback.boom_deg);
            sim.arm_deg = spec.ang_arm.value_or(fallback.arm_deg);
            sim.load = mh::swing_power(params, profile, sim.boom_deg, sim.arm_deg, spec.load);
            break;
        case Joint::none: break;
    }
    sim.motion = profile;
    return sim;
}

// Pose the machine is left in after a task, used as context for later tasks
// that omit their context angles.
Pose advance(Pose pose, const TaskSpec& spec) {
    if (spec.boom_fin_ang) pose.boom_deg = *spec.boom_fin_ang;
    if (spec.ang_boom) pose.boom_deg = *spec.ang_boom;
    if (spec.arm_fin_ang) pose.arm_deg = *spec.arm_fin_ang;
    if (spec.ang_arm) pose.arm_deg = *spec.ang_arm;
    switch (joint_of(spec.task)) {
        case Joint::boom: pose.boom_deg = *spec.value_fin; break;
        case Joint::arm: pose.arm_deg = *spec.value_fin; break;
        default: break;
    }
    return pose;
}

std::size_t snap(double t, double dt) {
    return static_cast<std::size_t>(std::llround(t / dt));
}

}  // namespace

TaskSimulation simulate_task(const ScheduledTask& task, const MachineParams& params, const Pose& fallback) {
    if (!supported_by(task.spec.task, params.kind))
        throw ValidationError(task_label(task) + " is not available on a " + to_string(params.kind));
    try {
        return run(task, params, fallback);
    } catch (const GeometryError& e) {
        throw GeometryError(task_label(task) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(task_label(task) + ": " + e.what());
    }
}

TaskSimulation simulate_task(const ScheduledTask& task, const MachineParams& params) {
    return simulate_task(task, params, Pose::initial(params));
}

double LoadProfile::total_energy_j() const {
    double e = 0.0;
    for (std::size_t k = 1; k < total_w.size(); ++k) e += 0.5 * (total_w[k] + total_w[k - 1]) * dt_s;
    return e;
}

LoadProfile aggregate(const ScheduledPlan& plan, const MachineParams& params) {
    LoadProfile out;
    out.machine = plan.machine.empty() ? params.name : plan.machine;
    out.dt_s = plan.dt_s;
    if (plan.tasks.empty()) return out;

    const double dt = plan.dt_s;
    std::vector<TaskSimulation> sims;
    sims.reserve(plan.tasks.size());
    Pose pose = Pose::initial(params);
    for (const auto& task : plan.tasks) {
        sims.push_back(simulate_task(task, params, pose));
        pose = advance(pose, task.spec);
    }

    std::size_t samples = snap(plan.horizon_s(), dt) + 1;
    for (std::size_t i = 0; i < plan.tasks.size(); ++i)
        samples = std::max(samples, snap(plan.tasks[i].start_s, dt) + sims[i].load.time_s.size());

    out.time_s.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) out.time_s[k] = static_cast<double>(k) * dt;
    for (auto& p : out.power_w) p.assign(samples, 0.0);
    out.total_w.assign(samples, 0.0);

    constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
    for (auto& j : out.joints) {
        j.angle_deg.assign(samples, kUnset);
        j.velocity_deg_s.assign(samples, 0.0);
    }

    // Last occupied sample per component, for overlap detection.
    std::array<std::optional<std::size_t>, 4> busy_until;

    for (std::size_t i = 0; i < plan.tasks.size(); ++i) {
        const auto& task = plan.tasks[i];
        const auto& sim = sims[i];
        const auto comp = component_of(task.spec.task);
        const auto slot = static_cast<std::size_t>(comp);
        const std::size_t first = snap(task.start_s, dt);
        const std::size_t count = sim.load.time_s.size();

        TaskAnnotation ann;
        ann.task = to_string(task.spec.task);
        ann.index = i;
        ann.repeat = task.repeat_index;
        ann.component = comp;
        ann.first_sample = first;
        ann.last_sample = first + count - 1;
        ann.start_s = out.time_s[first];
        ann.end_s = out.time_s[ann.last_sample];
        ann.adjustment = task.adjustment;
        ann.requested_duration_s = task.spec.duration;
        ann.effective_duration_s = task.effective_duration_s;
        ann.requested_vmax = task.spec.velocity_max.value_or(0.0);
        ann.effective_vmax = task.effective_vmax;
        ann.peak_power_w = sim.load.peak_power();
        ann.energy_j = sim.load.energy();
        ann.over_center = sim.load.over_center;

        // Appended tasks share a boundary sample, give or take one for rounding of the
        // start time; anything more is a real overlap.
        if (comp != Component::idle && busy_until[slot] && first + 1 < *busy_until[slot])
            ann.warnings.push_back(std::string("overlaps an earlier ") + to_string(comp) +
                                   " task; powers are summed");
        busy_until[slot] = std::max(busy_until[slot].value_or(0), ann.last_sample);
        if (sim.load.over_center)
            ann.warnings.push_back("gravity moment changes sign during the move (over centre)");

        auto& power = out.power_w[slot];
        for (std::size_t k = 0; k < count; ++k) power[first + k] += sim.load.power_w[k];

        if (sim.motion) {
            auto& trace = out.joints[static_cast<std::size_t>(joint_of(task.spec.task))];
            for (std::size_t k = 0; k < count; ++k) {
                trace.angle_deg[first + k] = sim.motion->samples[k].position;
                trace.velocity_deg_s[first + k] += sim.motion->samples[k].velocity;
            }
        }
        out.annotations.push_back(std::move(ann));
    }

    for (std::size_t k = 0; k < samples; ++k) {
        double sum = 0.0;
        for (const auto& p : out.power_w) sum += p[k];
        out.total_w[k] = sum;
    }

    // Hold joint angles between tasks; before a joint first moves it sits at its initial pose.
    const std::array<double, 3> initial{params.initial_boom_deg, params.initial_arm_deg, 0.0};
    for (std::size_t j = 0; j < out.joints.size(); ++j) {
        auto& a = out.joints[j].angle_deg;
        auto first_known = std::find_if(a.begin(), a.end(), [](double v) { return !std::isnan(v); });
        double held = first_known != a.end() ? *first_known : initial[j];
        for (auto& v : a) {
            if (std::isnan(v)) v = held;
            else held = v;
        }
    }
    return out;
}

}  // namespace lpg
