// lpg: load profile generator command-line front end.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lpg/errors.hpp"
#include "lpg/load_aggregator.hpp"
#include "lpg/machine_params.hpp"
#include "lpg/param_scaling.hpp"
#include "lpg/plan_dsl.hpp"
#include "lpg/profile_io.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit : int {
    kOk = 0,
    kUsage = 2,
    kNotFound = 3,
    kParse = 4,
    kValidation = 5,
    kSimulation = 6,
};

struct NotFound : lpg::Error {
    using lpg::Error::Error;
};

void require_file(const std::string& path, const char* what) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) throw NotFound(std::string(what) + " file not found: " + path);
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lpg::Error("cannot write " + path.string());
    out << text;
    if (!out) throw lpg::Error("write failed: " + path.string());
}

struct RunOptions {
    std::string machine;
    std::string plan;
    std::string out = "out";
    std::optional<double> dt;
    std::vector<std::string> formats{"csv"};
    bool plot = false;
    std::optional<std::string> lowering_formula;
    std::optional<std::string> bearing_friction;
};

lpg::MachineParams load_with_overrides(const RunOptions& o) {
    auto params = lpg::load_machine(o.machine);
    if (o.lowering_formula) params.lowering_formula = lpg::lowering_formula_from_string(*o.lowering_formula);
    if (o.bearing_friction) {
        try {
            params.bearing_friction = lpg::bearing_friction_from_string(*o.bearing_friction);
        } catch (const lpg::Error& e) {
            throw CLI::ValidationError("--bearing-friction", e.what());
        }
    }
    lpg::validate(params);
    return params;
}

// Shared by run and validate: load both files and resolve the schedule.
// Returns false when the plan has error-level findings.
bool prepare(const RunOptions& o, lpg::MachineParams& params, lpg::ScheduledPlan& plan) {
    require_file(o.machine, "machine");
    require_file(o.plan, "plan");
    params = load_with_overrides(o);
    auto doc = lpg::load_plan(o.plan);
    if (o.dt) doc.dt_s = *o.dt;
    if (!doc.machine.empty() && !params.name.empty() && doc.machine != params.name)
        std::cerr << "warning: plan targets '" << doc.machine << "' but machine file is '" << params.name << "'\n";
    plan = lpg::resolve_timeline(doc);

    bool ok = true;
    for (const auto& d : lpg::validate_plan(plan, params)) {
        std::cerr << to_string(d.severity) << ": task " << d.task_index << ": " << d.message << "\n";
        if (d.severity == lpg::Diagnostic::Severity::error) ok = false;
    }
    return ok;
}

int cmd_run(const RunOptions& o) {
    lpg::MachineParams params;
    lpg::ScheduledPlan plan;
    if (!prepare(o, params, plan)) return kValidation;

    lpg::LoadProfile profile;
    try {
        profile = lpg::aggregate(plan, params);
    } catch (const lpg::GeometryError& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kSimulation;
    }

    const fs::path dir(o.out);
    fs::create_directories(dir);
    for (const auto& f : o.formats) {
        if (f == "csv") write_text(dir / "profile.csv", lpg::profile_to_csv(profile));
        else if (f == "json") write_text(dir / "profile.json", lpg::profile_to_json(profile));
    }
    if (o.plot) {
        write_text(dir / "power.svg", lpg::power_plot_svg(profile));
        write_text(dir / "joints.svg", lpg::joint_plot_svg(profile));
    }
    std::cout << lpg::summary_table(profile);
    return kOk;
}

int cmd_validate(const RunOptions& o) {
    lpg::MachineParams params;
    lpg::ScheduledPlan plan;
    const bool ok = prepare(o, params, plan);
    std::cout << plan.tasks.size() << " scheduled tasks, horizon " << plan.horizon_s() << " s: "
              << (ok ? "ok" : "invalid") << "\n";
    return ok ? kOk : kValidation;
}

int cmd_scale(const std::string& machine, double mass, const std::string& output, const std::string& name) {
    require_file(machine, "machine");
    const auto ref = lpg::ScalingReference::from_machine(lpg::load_machine(machine));
    auto scaled = lpg::scale_machine(ref, mass);
    if (!name.empty()) scaled.name = name;
    const fs::path out(output);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_text(out, lpg::serialize_machine(scaled));
    std::cout << "wrote " << output << " (" << mass << " kg)\n";
    return kOk;
}

int cmd_list_tasks() {
    for (const auto k : lpg::all_task_kinds()) {
        std::string machines;
        for (const auto m : {lpg::MachineKind::material_handler, lpg::MachineKind::forest_forwarder})
            if (lpg::supported_by(k, m)) machines += (machines.empty() ? "" : ", ") + std::string(to_string(m));
        std::printf("%-14s %s\n", to_string(k), machines.c_str());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Load profile generator for non-road mobile machinery"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--machine", run_opts.machine, "Machine parameter file (JSON)")->required();
        sub->add_option("--plan", run_opts.plan, "Plan file (JSON)")->required();
        sub->add_option("--dt", run_opts.dt, "Override the plan's time step [s]")
            ->check(CLI::PositiveNumber);
        sub->add_option("--lowering-formula", run_opts.lowering_formula, "Lowering force: diameter_difference or annulus")
            ->check(CLI::IsMember({"diameter_difference", "annulus"}));
        sub->add_option("--bearing-friction", run_opts.bearing_friction,
                        "Swing friction: none, constant:<Nm> or coefficient:<mu>:<D_m>");
    };

    auto* run = app.add_subcommand("run", "Simulate a plan and export the load profile");
    add_common(run);
    run->add_option("--out", run_opts.out, "Output directory")->capture_default_str();
    run->add_option("--format", run_opts.formats, "Export formats (csv, json)")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    run->add_flag("--plot", run_opts.plot, "Write SVG plots");

    auto* validate = app.add_subcommand("validate", "Check a plan against a machine without running it");
    add_common(validate);

    std::string scale_machine, scale_output, scale_name;
    double scale_mass = 0.0;
    auto* scale = app.add_subcommand("scale", "Scale a reference machine to a new vehicle mass");
    scale->add_option("--machine", scale_machine, "Reference machine file")->required();
    scale->add_option("--mass", scale_mass, "Target vehicle mass [kg]")->required();
    scale->add_option("--output", scale_output, "Scaled machine file to write")->required();
    scale->add_option("--name", scale_name, "Name for the scaled machine");

    app.add_subcommand("list-tasks", "List the task names the plan language accepts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) {
            if (run_opts.formats.empty()) throw CLI::ValidationError("--format", "at least one format is required");
            return cmd_run(run_opts);
        }
        if (*validate) return cmd_validate(run_opts);
        if (*scale) return cmd_scale(scale_machine, scale_mass, scale_output, scale_name);
        return cmd_list_tasks();
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotFound;
    } catch (const lpg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const lpg::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const lpg::GeometryError& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kSimulation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
