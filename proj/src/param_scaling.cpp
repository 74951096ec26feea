#include "lpg/param_scaling.hpp"

#include <cmath>

#include "lpg/errors.hpp"

namespace lpg {

ScalingReference ScalingReference::from_machine(const MachineParams& machine) {
    ScalingReference ref;
    ref.machine = machine;
    for (const auto& field : scalable_fields()) {
        auto it = machine.scaling_rules.find(field);
        ref.rules[field] = it != machine.scaling_rules.end() ? it->second : default_scaling_rule(field);
    }
    return ref;
}

ScalingRule ScalingReference::rule_for(const std::string& field) const {
    auto it = rules.find(field);
    return it != rules.end() ? it->second : default_scaling_rule(field);
}

double scaling_factor(double ref_value, double ref_vehicle_mass) {
    if (!(ref_vehicle_mass > 0.0))
        throw ValidationError("scaling factor: reference vehicle mass must be > 0");
    return ref_value / ref_vehicle_mass;
}

MachineParams scale_machine(const ScalingReference& ref, double new_vehicle_mass) {
    if (!(new_vehicle_mass > 0.0)) throw ValidationError("scale: target vehicle mass must be > 0");
    const double ref_mass = ref.machine.m_vehicle;
    if (!(ref_mass > 0.0)) throw ValidationError("scale: reference vehicle mass must be > 0");

    // m_new / m_ref is exactly 1 for identity scaling, so every field copies bit-for-bit.
    const double mass_ratio = new_vehicle_mass / ref_mass;
    const double length_ratio = std::cbrt(mass_ratio);

    MachineParams out = ref.machine;
    out.m_vehicle = new_vehicle_mass;
    for (const auto& field : scalable_fields()) {
        const auto value = get_field(ref.machine, field);
        if (!value) continue;
        switch (ref.rule_for(field)) {
            case ScalingRule::mass: set_field(out, field, *value * mass_ratio); break;
            case ScalingRule::length: set_field(out, field, *value * length_ratio); break;
            case ScalingRule::fixed: break;
        }
    }

    try {
        validate(out);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("scaled parameters violate machine invariants: ") + e.what());
    }
    return out;
}

}  // namespace lpg
