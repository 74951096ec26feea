#include "lpg/machine_params.hpp"

#include <cmath>
#include <sstream>

#include "json_util.hpp"
#include "lpg/errors.hpp"

namespace lpg {

using nlohmann::json;

namespace {

struct DoubleField {
    const char* name;
    double MachineParams::*member;
};

// Plain numeric fields, in document order. Mount coordinates are optional and
// handled separately.
constexpr DoubleField kDoubleFields[] = {
    {"m_vehicle", &MachineParams::m_vehicle},
    {"m_cabin", &MachineParams::m_cabin},
    {"m_boom", &MachineParams::m_boom},
    {"m_arm", &MachineParams::m_arm},
    {"m_bucket", &MachineParams::m_bucket},
    {"L_boom", &MachineParams::L_boom},
    {"L_arm", &MachineParams::L_arm},
    {"l_cabin", &MachineParams::l_cabin},
    {"w_cabin", &MachineParams::w_cabin},
    {"l_joints_AB", &MachineParams::l_joints_AB},
    {"l_joints_DC", &MachineParams::l_joints_DC},
    {"l_joints_BD", &MachineParams::l_joints_BD},
    {"l_joint_CD", &MachineParams::l_joint_CD},
    {"l_joint_BC", &MachineParams::l_joint_BC},
    {"D_cyl_boom", &MachineParams::D_cyl_boom},
    {"D_rod_boom", &MachineParams::D_rod_boom},
    {"D_cyl_arm", &MachineParams::D_cyl_arm},
    {"D_rod_arm", &MachineParams::D_rod_arm},
    {"p_lower", &MachineParams::p_lower},
    {"g", &MachineParams::g},
    {"idle_power_w", &MachineParams::idle_power_w},
};

constexpr const char* kMountFields[] = {"z_c", "x_c", "y_c"};

std::optional<double> MachineParams::*mount_member(const std::string& name) {
    if (name == "z_c") return &MachineParams::z_c;
    if (name == "x_c") return &MachineParams::x_c;
    if (name == "y_c") return &MachineParams::y_c;
    return nullptr;
}

const DoubleField* find_double_field(const std::string& name) {
    for (const auto& f : kDoubleFields)
        if (name == f.name) return &f;
    return nullptr;
}

AngleLimits parse_limits(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("machine: limits_deg." + key + " must be [min, max]");
    return AngleLimits{j[0].get<double>(), j[1].get<double>()};
}

BearingFriction parse_friction(const json& j) {
    if (!j.is_object()) throw ParseError("machine: bearing_friction must be an object");
    BearingFriction f;
    for (const auto& [key, value] : j.items()) {
        if (key == "mode") {
            if (!value.is_string()) throw ParseError("machine: bearing_friction.mode must be a string");
            const auto mode = value.get<std::string>();
            if (mode == "none") f.mode = BearingFriction::Mode::none;
            else if (mode == "constant_torque") f.mode = BearingFriction::Mode::constant_torque;
            else if (mode == "coefficient") f.mode = BearingFriction::Mode::coefficient;
            else throw ParseError("machine: unknown bearing_friction.mode '" + mode + "'");
        } else if (key == "torque_nm") {
            f.torque_nm = detail::require_number(value, key, "machine.bearing_friction");
        } else if (key == "coefficient") {
            f.coefficient = detail::require_number(value, key, "machine.bearing_friction");
        } else if (key == "bearing_diameter_m") {
            f.bearing_diameter_m = detail::require_number(value, key, "machine.bearing_friction");
        } else {
            throw ParseError("machine: unknown key 'bearing_friction." + key + "'");
        }
    }
    return f;
}

}  // namespace

const char* to_string(MachineKind k) {
    switch (k) {
        case MachineKind::material_handler: return "material_handler";
        case MachineKind::forest_forwarder: return "forest_forwarder";
    }
    return "unknown";
}

MachineKind machine_kind_from_string(const std::string& s) {
    if (s == "material_handler") return MachineKind::material_handler;
    if (s == "forest_forwarder") return MachineKind::forest_forwarder;
    throw ParseError("unknown machine kind '" + s + "'");
}

const char* to_string(LoweringFormula f) {
    return f == LoweringFormula::diameter_difference ? "diameter_difference" : "annulus";
}

LoweringFormula lowering_formula_from_string(const std::string& s) {
    if (s == "diameter_difference") return LoweringFormula::diameter_difference;
    if (s == "annulus") return LoweringFormula::annulus;
    throw ParseError("unknown lowering formula '" + s + "' (expected diameter_difference|annulus)");
}

const char* to_string(BearingFriction::Mode m) {
    switch (m) {
        case BearingFriction::Mode::none: return "none";
        case BearingFriction::Mode::constant_torque: return "constant_torque";
        case BearingFriction::Mode::coefficient: return "coefficient";
    }
    return "unknown";
}

double BearingFriction::torque(double supported_mass_kg, double g) const {
    switch (mode) {
        case Mode::none: return 0.0;
        case Mode::constant_torque: return torque_nm;
        case Mode::coefficient: return coefficient * supported_mass_kg * g * bearing_diameter_m / 2.0;
    }
    return 0.0;
}

BearingFriction bearing_friction_from_string(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);

    auto number = [&](const std::string& text) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || text.empty())
            throw ParseError("bearing friction: '" + text + "' is not a number");
        return v;
    };

    BearingFriction f;
    if (parts.size() == 1 && parts[0] == "none") return f;
    if (parts.size() == 2 && parts[0] == "constant") {
        f.mode = BearingFriction::Mode::constant_torque;
        f.torque_nm = number(parts[1]);
        return f;
    }
    if (parts.size() == 3 && parts[0] == "coefficient") {
        f.mode = BearingFriction::Mode::coefficient;
        f.coefficient = number(parts[1]);
        f.bearing_diameter_m = number(parts[2]);
        return f;
    }
    throw ParseError("bearing friction: expected none | constant:<Nm> | coefficient:<mu>:<diameter_m>, got '" +
                     s + "'");
}

const char* to_string(ScalingRule r) {
    switch (r) {
        case ScalingRule::mass: return "mass";
        case ScalingRule::length: return "length";
        case ScalingRule::fixed: return "fixed";
    }
    return "unknown";
}

ScalingRule scaling_rule_from_string(const std::string& s) {
    if (s == "mass") return ScalingRule::mass;
    if (s == "length") return ScalingRule::length;
    if (s == "fixed") return ScalingRule::fixed;
    throw ParseError("unknown scaling rule '" + s + "' (expected mass|length|fixed)");
}

double MachineParams::mount_x() const {
    if (x_c) return *x_c;
    if (z_c) return *z_c / std::sqrt(2.0);
    throw ValidationError("machine '" + name + "': boom cylinder mount needs z_c or x_c/y_c");
}

double MachineParams::mount_y() const {
    if (y_c) return *y_c;
    if (z_c) return -*z_c / std::sqrt(2.0);
    throw ValidationError("machine '" + name + "': boom cylinder mount needs z_c or x_c/y_c");
}

void validate(const MachineParams& p) {
    std::vector<std::string> problems;
    auto positive = [&](const char* field, double v) {
        if (!(v > 0.0)) problems.push_back(std::string(field) + " must be > 0");
    };
    auto non_negative = [&](const char* field, double v) {
        if (!(v >= 0.0)) problems.push_back(std::string(field) + " must be >= 0");
    };

    positive("m_vehicle", p.m_vehicle);
    positive("m_boom", p.m_boom);
    positive("m_arm", p.m_arm);
    non_negative("m_bucket", p.m_bucket);
    positive("L_boom", p.L_boom);
    positive("L_arm", p.L_arm);
    positive("l_joints_AB", p.l_joints_AB);
    positive("D_cyl_boom", p.D_cyl_boom);
    positive("D_rod_boom", p.D_rod_boom);
    positive("D_cyl_arm", p.D_cyl_arm);
    positive("D_rod_arm", p.D_rod_arm);
    non_negative("p_lower", p.p_lower);
    positive("g", p.g);
    non_negative("idle_power_w", p.idle_power_w);

    if (p.include_cabin_inertia) {
        positive("m_cabin", p.m_cabin);
        positive("l_cabin", p.l_cabin);
        positive("w_cabin", p.w_cabin);
    } else {
        non_negative("m_cabin", p.m_cabin);
    }

    if (p.kind == MachineKind::material_handler) {
        positive("l_joints_DC", p.l_joints_DC);
        positive("l_joints_BD", p.l_joints_BD);
    } else {
        positive("l_joint_CD", p.l_joint_CD);
        positive("l_joint_BC", p.l_joint_BC);
    }

    if (p.D_rod_boom >= p.D_cyl_boom) problems.push_back("D_rod_boom must be < D_cyl_boom");
    if (p.D_rod_arm >= p.D_cyl_arm) problems.push_back("D_rod_arm must be < D_cyl_arm");

    const bool explicit_mount = p.x_c.has_value() && p.y_c.has_value();
    if (p.x_c.has_value() != p.y_c.has_value())
        problems.push_back("x_c and y_c must be given together");
    if (!explicit_mount && !p.z_c) problems.push_back("boom cylinder mount needs z_c or x_c/y_c");
    if (p.z_c && !explicit_mount && !(*p.z_c > 0.0)) problems.push_back("z_c must be > 0");

    switch (p.bearing_friction.mode) {
        case BearingFriction::Mode::none: break;
        case BearingFriction::Mode::constant_torque:
            non_negative("bearing_friction.torque_nm", p.bearing_friction.torque_nm);
            break;
        case BearingFriction::Mode::coefficient:
            non_negative("bearing_friction.coefficient", p.bearing_friction.coefficient);
            positive("bearing_friction.bearing_diameter_m", p.bearing_friction.bearing_diameter_m);
            break;
    }

    for (const auto& [label, lim] : {std::pair{"boom", p.boom_limits}, std::pair{"arm", p.arm_limits},
                                     std::pair{"swing", p.swing_limits}})
        if (lim.min_deg > lim.max_deg) problems.push_back(std::string("limits_deg.") + label + " min > max");

    if (problems.empty()) return;
    std::string msg = "machine '" + p.name + "' is invalid:";
    for (const auto& s : problems) msg += "\n  - " + s;
    throw ValidationError(msg);
}

const std::vector<std::string>& scalable_fields() {
    static const std::vector<std::string> fields = [] {
        std::vector<std::string> out;
        for (const auto& f : kDoubleFields)
            if (std::string(f.name) != "m_vehicle") out.emplace_back(f.name);
        for (const char* m : kMountFields) out.emplace_back(m);
        return out;
    }();
    return fields;
}

ScalingRule default_scaling_rule(const std::string& field) {
    if (field.starts_with("m_")) return ScalingRule::mass;
    if (field == "p_lower" || field == "g" || field == "idle_power_w") return ScalingRule::fixed;
    return ScalingRule::length;
}

std::optional<double> get_field(const MachineParams& p, const std::string& field) {
    if (const auto* f = find_double_field(field)) return p.*(f->member);
    if (auto m = mount_member(field)) return p.*m;
    throw ValidationError("unknown machine field '" + field + "'");
}

void set_field(MachineParams& p, const std::string& field, double value) {
    if (const auto* f = find_double_field(field)) {
        p.*(f->member) = value;
        return;
    }
    if (auto m = mount_member(field)) {
        p.*m = value;
        return;
    }
    throw ValidationError("unknown machine field '" + field + "'");
}

MachineParams parse_machine(const std::string& text) {
    const json doc = detail::parse_json(text, "machine");
    if (!doc.is_object()) throw ParseError("machine: document must be an object");

    MachineParams p;
    bool have_kind = false;
    // Forwarder cabins are not modelled unless the file says otherwise.
    std::optional<bool> include_cabin;

    for (const auto& [key, value] : doc.items()) {
        if (key == "name") {
            if (!value.is_string()) throw ParseError("machine: 'name' must be a string");
            p.name = value.get<std::string>();
        } else if (key == "kind") {
            if (!value.is_string()) throw ParseError("machine: 'kind' must be a string");
            p.kind = machine_kind_from_string(value.get<std::string>());
            have_kind = true;
        } else if (const auto* f = find_double_field(key)) {
            p.*(f->member) = detail::require_number(value, key, "machine");
        } else if (auto m = mount_member(key)) {
            p.*m = detail::require_number(value, key, "machine");
        } else if (key == "bearing_friction") {
            p.bearing_friction = parse_friction(value);
        } else if (key == "lowering_formula") {
            if (!value.is_string()) throw ParseError("machine: 'lowering_formula' must be a string");
            p.lowering_formula = lowering_formula_from_string(value.get<std::string>());
        } else if (key == "mount_angle_source") {
            const auto s = value.is_string() ? value.get<std::string>() : std::string();
            if (s == "boom") p.mount_angle_source = MountAngleSource::boom;
            else if (s == "arm") p.mount_angle_source = MountAngleSource::arm;
            else throw ParseError("machine: 'mount_angle_source' must be \"boom\" or \"arm\"");
        } else if (key == "include_cabin_inertia") {
            if (!value.is_boolean()) throw ParseError("machine: 'include_cabin_inertia' must be a boolean");
            include_cabin = value.get<bool>();
        } else if (key == "limits_deg") {
            if (!value.is_object()) throw ParseError("machine: 'limits_deg' must be an object");
            for (const auto& [joint, lim] : value.items()) {
                if (joint == "boom") p.boom_limits = parse_limits(lim, joint);
                else if (joint == "arm") p.arm_limits = parse_limits(lim, joint);
                else if (joint == "swing") p.swing_limits = parse_limits(lim, joint);
                else throw ParseError("machine: unknown joint 'limits_deg." + joint + "'");
            }
        } else if (key == "initial_pose_deg") {
            if (!value.is_object()) throw ParseError("machine: 'initial_pose_deg' must be an object");
            for (const auto& [joint, ang] : value.items()) {
                if (joint == "boom") p.initial_boom_deg = detail::require_number(ang, joint, "machine.initial_pose_deg");
                else if (joint == "arm") p.initial_arm_deg = detail::require_number(ang, joint, "machine.initial_pose_deg");
                else throw ParseError("machine: unknown joint 'initial_pose_deg." + joint + "'");
            }
        } else if (key == "scaling_rules") {
            if (!value.is_object()) throw ParseError("machine: 'scaling_rules' must be an object");
            for (const auto& [field, rule] : value.items()) {
                if (!find_double_field(field) && !mount_member(field))
                    throw ParseError("machine: scaling rule for unknown field '" + field + "'");
                if (!rule.is_string()) throw ParseError("machine: scaling rule must be a string");
                p.scaling_rules[field] = scaling_rule_from_string(rule.get<std::string>());
            }
        } else {
            throw ParseError("machine: unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError("machine: missing 'kind'");
    p.include_cabin_inertia = include_cabin.value_or(p.kind == MachineKind::material_handler);

    validate(p);
    return p;
}

MachineParams load_machine(const std::string& path) {
    return parse_machine(detail::read_file(path));
}

std::string serialize_machine(const MachineParams& p) {
    using ordered = nlohmann::ordered_json;
    ordered doc = ordered::object();
    doc["name"] = p.name;
    doc["kind"] = to_string(p.kind);
    for (const auto& f : kDoubleFields) doc[f.name] = p.*(f.member);
    for (const char* m : kMountFields)
        if (const auto& v = p.*mount_member(m)) doc[m] = *v;

    ordered friction = {{"mode", to_string(p.bearing_friction.mode)}};
    if (p.bearing_friction.mode == BearingFriction::Mode::constant_torque)
        friction["torque_nm"] = p.bearing_friction.torque_nm;
    if (p.bearing_friction.mode == BearingFriction::Mode::coefficient) {
        friction["coefficient"] = p.bearing_friction.coefficient;
        friction["bearing_diameter_m"] = p.bearing_friction.bearing_diameter_m;
    }
    doc["bearing_friction"] = friction;
    doc["lowering_formula"] = to_string(p.lowering_formula);
    doc["mount_angle_source"] = p.mount_angle_source == MountAngleSource::boom ? "boom" : "arm";
    doc["include_cabin_inertia"] = p.include_cabin_inertia;
    doc["limits_deg"] = {
        {"boom", {p.boom_limits.min_deg, p.boom_limits.max_deg}},
        {"arm", {p.arm_limits.min_deg, p.arm_limits.max_deg}},
        {"swing", {p.swing_limits.min_deg, p.swing_limits.max_deg}},
    };
    doc["initial_pose_deg"] = {{"boom", p.initial_boom_deg}, {"arm", p.initial_arm_deg}};
    if (!p.scaling_rules.empty()) {
        ordered rules = ordered::object();
        for (const auto& [field, rule] : p.scaling_rules) rules[field] = to_string(rule);
        doc["scaling_rules"] = rules;
    }
    return doc.dump(2) + "\n";
}

}  // namespace lpg
