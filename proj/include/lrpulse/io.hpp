#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lrpulse/metrics.hpp"
#include "lrpulse/propagator.hpp"
#include "lrpulse/protocols.hpp"

namespace lrpulse {

// 12 significant digits everywhere: comparisons stay tolerance-driven
// and identical inputs give byte-identical files.
std::string format_double(double x);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// Columns: t_us, omega_p_rad_per_us, omega_s_rad_per_us.
std::string pulses_csv(const PulseSchedule& pulses, int n_samples);

// Columns: t_us, re/im of each amplitude, p1, p2, p3.
std::string trajectory_csv(const Trajectory& trajectory);

std::string sweep_csv(const SweepTable& table);

nlohmann::json metrics_json(const RunMetrics& metrics);
nlohmann::json sweep_json(const SweepTable& table);
nlohmann::json boundary_report_json(const BoundaryReport& report);

} // namespace lrpulse
