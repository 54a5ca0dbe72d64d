#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rliff/experiment.hpp"

namespace rliff {

// Trajectory CSV schema (bit-exact): header
//   t,x_true,y_true,x_rssi,y_rssi,x_pdr,y_pdr,x_aoa,y_aoa
// comma separated, '.' decimal point, positions with 6 decimals, LF line
// endings, no quoting.
extern const char* const kTrajectoryCsvHeader;

std::string trajectory_to_csv(const Trajectory& traj);

// Parses and validates a trajectory CSV; errors cite the offending file
// line. env_id and scenario are not part of the schema and come from the
// caller.
Trajectory trajectory_from_csv(const std::string& text, const std::string& origin,
                               const std::string& env_id, Scenario scenario);
Trajectory read_trajectory_csv(const std::filesystem::path& path,
                               const std::string& env_id, Scenario scenario);

nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const ReliabilityReport& report);

// Per-episode cumulative-reward traces, one row per episode:
//   method,repetition,episode,cumulative_reward
std::string reliability_traces_csv(const ReliabilityReport& report);

// Write-temp-then-rename, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rliff
