#pragma once

#include <string>

#include "lpg/machine_params.hpp"

namespace test {

inline std::string data_path(const std::string& rel) { return std::string(LPG_DATA_DIR) + "/" + rel; }

inline lpg::MachineParams material_handler() {
    return lpg::load_machine(data_path("machines/material_handler_20t_reference.json"));
}

inline lpg::MachineParams forwarder() { return lpg::load_machine(data_path("machines/forest_forwarder.json")); }

}  // namespace test
