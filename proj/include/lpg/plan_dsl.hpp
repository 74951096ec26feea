#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpg/machine_params.hpp"
#include "lpg/motion_kinematics.hpp"

namespace lpg {

enum class TaskKind { boom_lift, boom_lower, arm_lift, arm_lower, arm_lift_mh, arm_lower_mh, rotate, wait };

const char* to_string(TaskKind k);
std::optional<TaskKind> task_kind_from_string(std::string_view s);

/// All task names the DSL accepts, in declaration order.
const std::vector<TaskKind>& all_task_kinds();

/// Joint a task moves; wait moves nothing.
enum class Joint { boom, arm, swing, none };
Joint joint_of(TaskKind k);

bool is_lowering(TaskKind k);
bool supported_by(TaskKind task, MachineKind machine);

/// Ramp share used when a task omits "ramp %".
inline constexpr double kDefaultRampFraction = 0.4;
inline constexpr double kDefaultDt = 0.01;

struct TimeIni {
    enum class Mode { absolute, append, simultan };
    Mode mode = Mode::absolute;
    double seconds = 0.0;  ///< used when mode == absolute

    static TimeIni at(double s) { return {Mode::absolute, s}; }
    static TimeIni append() { return {Mode::append, 0.0}; }
    static TimeIni simultan() { return {Mode::simultan, 0.0}; }
    bool operator==(const TimeIni&) const = default;
};

/// One task_list entry. Angles deg, velocities deg/s, durations s, load kg.
struct TaskSpec {
    TaskKind task = TaskKind::wait;
    int task_repeats = 1;
    TimeIni time_ini;
    double duration = 0.0;
    std::optional<double> value_ini;
    std::optional<double> value_fin;
    std::optional<double> velocity_max;
    std::optional<double> ramp_fraction;  ///< key "ramp %"
    double load = 0.0;
    // Pose of the joints this task does not move.
    std::optional<double> boom_fin_ang;
    std::optional<double> arm_fin_ang;
    std::optional<double> ang_arm;
    std::optional<double> ang_boom;

    bool operator==(const TaskSpec&) const = default;
};

struct PlanDocument {
    std::string machine;
    double dt_s = kDefaultDt;
    std::vector<TaskSpec> tasks;

    bool operator==(const PlanDocument&) const = default;
};

struct ScheduledTask {
    TaskSpec spec;
    int repeat_index = 0;      ///< 0-based copy number within task_repeats
    std::size_t source_index = 0;  ///< index of the originating task_list entry
    double start_s = 0.0;
    double dt_s = kDefaultDt;  ///< sampling step inherited from the plan
    double effective_duration_s = 0.0;
    double effective_vmax = 0.0;
    Adjustment adjustment = Adjustment::none;

    double end_s() const { return start_s + effective_duration_s; }
};

struct ScheduledPlan {
    std::string machine;
    double dt_s = kDefaultDt;
    std::vector<ScheduledTask> tasks;

    /// Latest task end; 0 for an empty plan.
    double horizon_s() const;
};

struct Diagnostic {
    enum class Severity { info, warning, error };
    Severity severity = Severity::info;
    std::size_t task_index = 0;  ///< index into ScheduledPlan::tasks
    std::string message;
};

const char* to_string(Diagnostic::Severity s);

/// Parse a plan document (JSON). Throws ParseError on syntax errors (with
/// line/column), unknown tasks or keys, missing required parameters and
/// out-of-range values.
PlanDocument parse_plan_document(const std::string& text);

/// Task list only.
std::vector<TaskSpec> parse_plan(const std::string& text);

PlanDocument load_plan(const std::string& path);

/// Canonical JSON text; parse_plan_document(serialize_plan(d)) == d.
std::string serialize_plan(const PlanDocument& doc);

/// Motion request for a moving task, with the default ramp applied.
MotionRequest motion_request(const TaskSpec& spec, double dt_s);

/// Resolve append/simultan into absolute start times and expand repeats.
/// 'append' starts at the end of the immediately preceding scheduled task,
/// 'simultan' at its start. Throws ValidationError if the first task is symbolic.
ScheduledPlan resolve_timeline(const std::vector<TaskSpec>& tasks, double dt_s = kDefaultDt,
                               std::string machine = {});

ScheduledPlan resolve_timeline(const PlanDocument& doc);

/// Limit warnings, feasibility-adjustment infos and task/machine mismatches.
std::vector<Diagnostic> validate_plan(const ScheduledPlan& plan, const MachineParams& params);

}  // namespace lpg
