#pragma once

#include <map>
#include <string>

#include "lpg/machine_params.hpp"

namespace lpg {

/// Reference machine plus the scaling tag of every scalable field.
struct ScalingReference {
    MachineParams machine;
    std::map<std::string, ScalingRule> rules;

    /// Takes the machine's own scaling_rules and fills the rest with defaults.
    static ScalingReference from_machine(const MachineParams& machine);

    ScalingRule rule_for(const std::string& field) const;
};

/// Ratio of a reference quantity to the reference vehicle mass.
/// Throws ValidationError for a non-positive vehicle mass.
double scaling_factor(double ref_value, double ref_vehicle_mass);

/// Parameter set for a machine of `new_vehicle_mass` kg:
///   mass    p_ref / m_ref * m_new
///   length  p_ref * cbrt(m_new / m_ref)
///   fixed   copied
/// Throws ValidationError when the target mass is not positive or the scaled set
/// breaks a machine invariant (the message lists the offenders).
MachineParams scale_machine(const ScalingReference& ref, double new_vehicle_mass);

}  // namespace lpg
