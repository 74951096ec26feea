#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lpg/load_series.hpp"
#include "lpg/machine_params.hpp"
#include "lpg/motion_kinematics.hpp"
#include "lpg/plan_dsl.hpp"

namespace lpg {

/// Joint angles used for the joints a task does not move.
struct Pose {
    double boom_deg = 45.0;
    double arm_deg = 90.0;

    static Pose initial(const MachineParams& p) { return {p.initial_boom_deg, p.initial_arm_deg}; }
};

struct TaskSimulation {
    ComponentLoadSeries load;
    std::optional<MotionProfile> motion;  ///< empty for wait
    double boom_deg = 0.0;                ///< boom context (or start angle) used
    double arm_deg = 0.0;                 ///< arm context (or start angle) used
};

/// Run one scheduled task through the machine's mechanics. Context angles the
/// task does not carry come from `fallback`. Throws ValidationError when the task
/// is not available on the machine kind; geometry errors are re-raised with the
/// task name and time.
TaskSimulation simulate_task(const ScheduledTask& task, const MachineParams& params, const Pose& fallback);

TaskSimulation simulate_task(const ScheduledTask& task, const MachineParams& params);

struct TaskAnnotation {
    std::string task;
    std::size_t index = 0;  ///< position in ScheduledPlan::tasks
    int repeat = 0;
    Component component = Component::idle;
    double start_s = 0.0;  ///< snapped to the grid
    double end_s = 0.0;
    std::size_t first_sample = 0;
    std::size_t last_sample = 0;
    Adjustment adjustment = Adjustment::none;
    double requested_duration_s = 0.0;
    double effective_duration_s = 0.0;
    double requested_vmax = 0.0;
    double effective_vmax = 0.0;
    double peak_power_w = 0.0;
    double energy_j = 0.0;
    bool over_center = false;
    std::vector<std::string> warnings;
};

struct JointTrace {
    std::vector<double> angle_deg;
    std::vector<double> velocity_deg_s;
};

inline constexpr std::array<Component, 4> kAllComponents{Component::boom, Component::arm, Component::swing,
                                                         Component::idle};

/// Machine-level load profile on a uniform grid t_i = i * dt.
struct LoadProfile {
    std::string machine;
    double dt_s = kDefaultDt;
    std::vector<double> time_s;
    /// Indexed by Component; zero outside the component's task windows.
    std::array<std::vector<double>, 4> power_w;
    std::vector<double> total_w;
    /// Indexed boom, arm, swing.
    std::array<JointTrace, 3> joints;
    std::vector<TaskAnnotation> annotations;

    double horizon_s() const { return time_s.empty() ? 0.0 : time_s.back(); }
    const std::vector<double>& power(Component c) const { return power_w[static_cast<std::size_t>(c)]; }
    double total_energy_j() const;
};

/// Simulate every task, place it on the global grid (start snapped to the nearest
/// sample) and sum. Same-component overlaps are allowed and annotated.
LoadProfile aggregate(const ScheduledPlan& plan, const MachineParams& params);

}  // namespace lpg
