#include "lpg/plan_dsl.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "lpg/errors.hpp"

namespace lpg {

using nlohmann::json;

namespace {

struct TaskName {
    TaskKind kind;
    const char* name;
};

constexpr TaskName kTaskNames[] = {
    {TaskKind::boom_lift, "boom_lift"},       {TaskKind::boom_lower, "boom_lower"},
    {TaskKind::arm_lift, "arm_lift"},         {TaskKind::arm_lower, "arm_lower"},
    {TaskKind::arm_lift_mh, "arm_lift_mh"},   {TaskKind::arm_lower_mh, "arm_lower_mh"},
    {TaskKind::rotate, "rotate"},             {TaskKind::wait, "wait"},
};

constexpr const char* kRampKey = "ramp %";

// Keys accepted in 'params' beyond the motion set, per task type.
std::set<std::string> allowed_keys(TaskKind k) {
    if (k == TaskKind::wait) return {"time_ini", "duration"};
    std::set<std::string> keys{"time_ini", "duration", "value_ini", "value_fin", "velocity_max", kRampKey, "load"};
    switch (joint_of(k)) {
        case Joint::boom: keys.insert("arm_fin_ang"); break;
        case Joint::arm: keys.insert("boom_fin_ang"); break;
        case Joint::swing: keys.insert({"ang_arm", "ang_boom"}); break;
        case Joint::none: break;
    }
    return keys;
}

std::string where(std::size_t index, TaskKind k) {
    return "task_list[" + std::to_string(index) + "] (" + to_string(k) + ")";
}

TaskSpec parse_task(const json& entry, std::size_t index) {
    const std::string at = "task_list[" + std::to_string(index) + "]";
    if (!entry.is_object()) throw ParseError(at + ": entry must be an object");

    TaskSpec spec;
    const json* params = nullptr;
    bool have_task = false;
    for (const auto& [key, value] : entry.items()) {
        if (key == "task") {
            if (!value.is_string()) throw ParseError(at + ": 'task' must be a string");
            const auto name = value.get<std::string>();
            auto kind = task_kind_from_string(name);
            if (!kind) throw ParseError(at + ": unknown task '" + name + "'");
            spec.task = *kind;
            have_task = true;
        } else if (key == "task_repeats") {
            if (!value.is_number() || value.get<double>() != std::floor(value.get<double>()) ||
                value.get<double>() < 1.0 || value.get<double>() > 1e6)
                throw ParseError(at + ": 'task_repeats' must be a positive integer");
            spec.task_repeats = static_cast<int>(value.get<double>());
        } else if (key == "params") {
            if (!value.is_object()) throw ParseError(at + ": 'params' must be an object");
            params = &value;
        } else {
            throw ParseError(at + ": unknown key '" + key + "'");
        }
    }
    if (!have_task) throw ParseError(at + ": missing 'task'");
    if (!params) throw ParseError(where(index, spec.task) + ": missing 'params'");

    const auto allowed = allowed_keys(spec.task);
    const std::string ctx = where(index, spec.task);
    auto number = [&](const json& v, const std::string& key) { return detail::require_number(v, key, ctx); };

    bool have_time = false, have_duration = false;
    for (const auto& [key, value] : params->items()) {
        if (!allowed.contains(key))
            throw ParseError(ctx + ": parameter '" + key + "' is not valid for this task");
        if (key == "time_ini") {
            if (value.is_string()) {
                const auto s = value.get<std::string>();
                if (s == "append") spec.time_ini = TimeIni::append();
                else if (s == "simultan") spec.time_ini = TimeIni::simultan();
                else throw ParseError(ctx + ": time_ini must be a number, \"append\" or \"simultan\"");
            } else {
                const double t = number(value, key);
                if (!(t >= 0.0)) throw ParseError(ctx + ": time_ini must be >= 0");
                spec.time_ini = TimeIni::at(t);
            }
            have_time = true;
        } else if (key == "duration") {
            spec.duration = number(value, key);
            if (!(spec.duration > 0.0)) throw ParseError(ctx + ": duration must be > 0");
            have_duration = true;
        } else if (key == "value_ini") {
            spec.value_ini = number(value, key);
        } else if (key == "value_fin") {
            spec.value_fin = number(value, key);
        } else if (key == "velocity_max") {
            spec.velocity_max = number(value, key);
            if (!(*spec.velocity_max > 0.0)) throw ParseError(ctx + ": velocity_max must be > 0");
        } else if (key == kRampKey) {
            spec.ramp_fraction = number(value, key);
            if (!(*spec.ramp_fraction > 0.0 && *spec.ramp_fraction < 1.0))
                throw ParseError(ctx + ": 'ramp %' must lie in (0, 1)");
        } else if (key == "load") {
            spec.load = number(value, key);
            if (!(spec.load >= 0.0)) throw ParseError(ctx + ": load must be >= 0");
        } else if (key == "boom_fin_ang") {
            spec.boom_fin_ang = number(value, key);
        } else if (key == "arm_fin_ang") {
            spec.arm_fin_ang = number(value, key);
        } else if (key == "ang_arm") {
            spec.ang_arm = number(value, key);
        } else if (key == "ang_boom") {
            spec.ang_boom = number(value, key);
        }
    }

    if (!have_time) throw ParseError(ctx + ": missing required parameter 'time_ini'");
    if (!have_duration) throw ParseError(ctx + ": missing required parameter 'duration'");
    if (spec.task != TaskKind::wait) {
        if (!spec.value_ini) throw ParseError(ctx + ": missing required parameter 'value_ini'");
        if (!spec.value_fin) throw ParseError(ctx + ": missing required parameter 'value_fin'");
        if (!spec.velocity_max) throw ParseError(ctx + ": missing required parameter 'velocity_max'");
    }
    return spec;
}

std::string format_seconds(double s) {
    std::ostringstream os;
    os.precision(6);
    os << s;
    return os.str();
}

void check_limits(std::vector<Diagnostic>& out, std::size_t index, const char* what, double value,
                  const AngleLimits& lim, const char* joint) {
    if (lim.contains(value)) return;
    out.push_back({Diagnostic::Severity::warning, index,
                   std::string(what) + " " + format_seconds(value) + " deg is outside the " + joint + " limits [" +
                       format_seconds(lim.min_deg) + ", " + format_seconds(lim.max_deg) + "]"});
}

}  // namespace

const char* to_string(TaskKind k) {
    for (const auto& t : kTaskNames)
        if (t.kind == k) return t.name;
    return "unknown";
}

std::optional<TaskKind> task_kind_from_string(std::string_view s) {
    for (const auto& t : kTaskNames)
        if (s == t.name) return t.kind;
    return std::nullopt;
}

const std::vector<TaskKind>& all_task_kinds() {
    static const std::vector<TaskKind> kinds = [] {
        std::vector<TaskKind> out;
        for (const auto& t : kTaskNames) out.push_back(t.kind);
        return out;
    }();
    return kinds;
}

Joint joint_of(TaskKind k) {
    switch (k) {
        case TaskKind::boom_lift:
        case TaskKind::boom_lower: return Joint::boom;
        case TaskKind::arm_lift:
        case TaskKind::arm_lower:
        case TaskKind::arm_lift_mh:
        case TaskKind::arm_lower_mh: return Joint::arm;
        case TaskKind::rotate: return Joint::swing;
        case TaskKind::wait: return Joint::none;
    }
    return Joint::none;
}

bool is_lowering(TaskKind k) {
    return k == TaskKind::boom_lower || k == TaskKind::arm_lower || k == TaskKind::arm_lower_mh;
}

bool supported_by(TaskKind task, MachineKind machine) {
    switch (task) {
        case TaskKind::arm_lift_mh:
        case TaskKind::arm_lower_mh: return machine == MachineKind::material_handler;
        case TaskKind::arm_lift:
        case TaskKind::arm_lower: return machine == MachineKind::forest_forwarder;
        default: return true;
    }
}

const char* to_string(Diagnostic::Severity s) {
    switch (s) {
        case Diagnostic::Severity::info: return "info";
        case Diagnostic::Severity::warning: return "warning";
        case Diagnostic::Severity::error: return "error";
    }
    return "unknown";
}

double ScheduledPlan::horizon_s() const {
    double h = 0.0;
    for (const auto& t : tasks) h = std::max(h, t.end_s());
    return h;
}

PlanDocument parse_plan_document(const std::string& text) {
    const json doc = detail::parse_json(text, "plan");
    if (!doc.is_object()) throw ParseError("plan: document must be an object");

    PlanDocument out;
    bool have_machine = false, have_list = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "machine") {
            if (!value.is_string()) throw ParseError("plan: 'machine' must be a string");
            out.machine = value.get<std::string>();
            have_machine = true;
        } else if (key == "dt_s") {
            out.dt_s = detail::require_number(value, key, "plan");
            if (!(out.dt_s > 0.0)) throw ParseError("plan: dt_s must be > 0");
        } else if (key == "task_list") {
            if (!value.is_array()) throw ParseError("plan: 'task_list' must be an array");
            for (std::size_t i = 0; i < value.size(); ++i) out.tasks.push_back(parse_task(value[i], i));
            have_list = true;
        } else {
            throw ParseError("plan: unknown key '" + key + "'");
        }
    }
    if (!have_machine) throw ParseError("plan: missing 'machine'");
    if (!have_list) throw ParseError("plan: missing 'task_list'");
    return out;
}

std::vector<TaskSpec> parse_plan(const std::string& text) { return parse_plan_document(text).tasks; }

PlanDocument load_plan(const std::string& path) { return parse_plan_document(detail::read_file(path)); }

std::string serialize_plan(const PlanDocument& doc) {
    using ordered = nlohmann::ordered_json;
    ordered out = ordered::object();
    out["machine"] = doc.machine;
    out["dt_s"] = doc.dt_s;
    ordered list = ordered::array();
    for (const auto& t : doc.tasks) {
        ordered params = ordered::object();
        switch (t.time_ini.mode) {
            case TimeIni::Mode::absolute: params["time_ini"] = t.time_ini.seconds; break;
            case TimeIni::Mode::append: params["time_ini"] = "append"; break;
            case TimeIni::Mode::simultan: params["time_ini"] = "simultan"; break;
        }
        params["duration"] = t.duration;
        if (t.task != TaskKind::wait) {
            params["value_ini"] = *t.value_ini;
            params["value_fin"] = *t.value_fin;
            params["velocity_max"] = *t.velocity_max;
            if (t.ramp_fraction) params[kRampKey] = *t.ramp_fraction;
            params["load"] = t.load;
        }
        if (t.boom_fin_ang) params["boom_fin_ang"] = *t.boom_fin_ang;
        if (t.arm_fin_ang) params["arm_fin_ang"] = *t.arm_fin_ang;
        if (t.ang_arm) params["ang_arm"] = *t.ang_arm;
        if (t.ang_boom) params["ang_boom"] = *t.ang_boom;
        list.push_back({{"task", to_string(t.task)}, {"task_repeats", t.task_repeats}, {"params", params}});
    }
    out["task_list"] = list;
    return out.dump(2) + "\n";
}

MotionRequest motion_request(const TaskSpec& spec, double dt_s) {
    if (spec.task == TaskKind::wait) throw ValidationError("wait tasks have no motion");
    MotionRequest req;
    req.s_ini = *spec.value_ini;
    req.s_fin = *spec.value_fin;
    req.duration_s = spec.duration;
    req.vmax = *spec.velocity_max;
    req.ramp_fraction = spec.ramp_fraction.value_or(kDefaultRampFraction);
    req.dt_s = dt_s;
    req.unit = MotionUnit::angular;
    return req;
}

ScheduledPlan resolve_timeline(const std::vector<TaskSpec>& tasks, double dt_s, std::string machine) {
    if (!(dt_s > 0.0)) throw ValidationError("resolve_timeline: dt must be > 0");
    ScheduledPlan plan;
    plan.machine = std::move(machine);
    plan.dt_s = dt_s;

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& spec = tasks[i];
        if (i == 0 && spec.time_ini.mode != TimeIni::Mode::absolute)
            throw ValidationError("task_list[0]: the first task needs a numeric time_ini, not '" +
                                  std::string(spec.time_ini.mode == TimeIni::Mode::append ? "append" : "simultan") +
                                  "'");

        ScheduledTask base;
        base.spec = spec;
        base.source_index = i;
        base.dt_s = dt_s;
        if (spec.task == TaskKind::wait) {
            base.effective_duration_s = spec.duration;
        } else {
            const auto req = motion_request(spec, dt_s);
            base.adjustment = classify(req);
            base.effective_duration_s = adjust_duration(req);
            base.effective_vmax = req.s_ini == req.s_fin ? 0.0 : adjust_velocity(req);
        }

        for (int r = 0; r < spec.task_repeats; ++r) {
            ScheduledTask t = base;
            t.repeat_index = r;
            if (r > 0) {
                t.start_s = plan.tasks.back().end_s();
            } else {
                switch (spec.time_ini.mode) {
                    case TimeIni::Mode::absolute: t.start_s = spec.time_ini.seconds; break;
                    case TimeIni::Mode::append: t.start_s = plan.tasks.back().end_s(); break;
                    case TimeIni::Mode::simultan: t.start_s = plan.tasks.back().start_s; break;
                }
            }
            if (t.start_s < 0.0) throw Error("internal: negative start time resolved for task " + std::to_string(i));
            plan.tasks.push_back(std::move(t));
        }
    }
    return plan;
}

ScheduledPlan resolve_timeline(const PlanDocument& doc) { return resolve_timeline(doc.tasks, doc.dt_s, doc.machine); }

std::vector<Diagnostic> validate_plan(const ScheduledPlan& plan, const MachineParams& params) {
    std::vector<Diagnostic> out;
    for (std::size_t i = 0; i < plan.tasks.size(); ++i) {
        const auto& t = plan.tasks[i];
        const auto& s = t.spec;
        if (!supported_by(s.task, params.kind)) {
            out.push_back({Diagnostic::Severity::error, i,
                           std::string("task '") + to_string(s.task) + "' is not available on a " +
                               to_string(params.kind)});
            continue;
        }
        switch (joint_of(s.task)) {
            case Joint::boom:
                check_limits(out, i, "value_ini", *s.value_ini, params.boom_limits, "boom");
                check_limits(out, i, "value_fin", *s.value_fin, params.boom_limits, "boom");
                break;
            case Joint::arm:
                check_limits(out, i, "value_ini", *s.value_ini, params.arm_limits, "arm");
                check_limits(out, i, "value_fin", *s.value_fin, params.arm_limits, "arm");
                break;
            case Joint::swing:
                check_limits(out, i, "value_ini", *s.value_ini, params.swing_limits, "swing");
                check_limits(out, i, "value_fin", *s.value_fin, params.swing_limits, "swing");
                break;
            case Joint::none: break;
        }
        if (s.boom_fin_ang) check_limits(out, i, "boom_fin_ang", *s.boom_fin_ang, params.boom_limits, "boom");
        if (s.ang_boom) check_limits(out, i, "ang_boom", *s.ang_boom, params.boom_limits, "boom");
        if (s.arm_fin_ang) check_limits(out, i, "arm_fin_ang", *s.arm_fin_ang, params.arm_limits, "arm");
        if (s.ang_arm) check_limits(out, i, "ang_arm", *s.ang_arm, params.arm_limits, "arm");

        if (t.adjustment == Adjustment::duration_increased) {
            out.push_back({Diagnostic::Severity::info, i,
                           "duration will be increased from " + format_seconds(s.duration) + " s to " +
                               format_seconds(t.effective_duration_s) + " s (displacement unreachable at " +
                               format_seconds(*s.velocity_max) + " deg/s)"});
        } else if (t.adjustment == Adjustment::velocity_reduced) {
            out.push_back({Diagnostic::Severity::info, i,
                           "velocity will be reduced from " + format_seconds(*s.velocity_max) + " deg/s to " +
                               format_seconds(t.effective_vmax) + " deg/s (displacement reached early in " +
                               format_seconds(s.duration) + " s)"});
        }
    }
    return out;
}

}  // namespace lpg
