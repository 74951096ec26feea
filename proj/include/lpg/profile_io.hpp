#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpg/load_aggregator.hpp"

namespace lpg {

/// Columns of an exported profile. p_idle_w is present only when some idle
/// power was produced.
struct CsvProfile {
    std::vector<double> time_s;
    std::vector<double> boom_w;
    std::vector<double> arm_w;
    std::vector<double> swing_w;
    std::optional<std::vector<double>> idle_w;
    std::vector<double> total_w;

    bool operator==(const CsvProfile&) const = default;
};

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

/// CSV with header t_s,p_boom_w,p_arm_w,p_swing_w[,p_idle_w],p_total_w.
std::string profile_to_csv(const LoadProfile& profile);

/// Inverse of profile_to_csv. Throws ParseError on malformed input.
CsvProfile parse_profile_csv(const std::string& text);

/// Columns of `profile` as they would be written to CSV.
CsvProfile csv_columns(const LoadProfile& profile);

/// Series plus per-task annotations as a JSON document.
std::string profile_to_json(const LoadProfile& profile);

/// Per-component power vs time.
std::string power_plot_svg(const LoadProfile& profile);

/// Joint angles and angular velocities vs time, two stacked panels.
std::string joint_plot_svg(const LoadProfile& profile);

/// Plain-text table: one row per task with peak power and energy, then totals.
std::string summary_table(const LoadProfile& profile);

}  // namespace lpg
