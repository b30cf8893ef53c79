#pragma once

#include <string>

#include "gaitplan/trajectory_types.hpp"

namespace gaitplan {

/// End-to-end pipeline: regression -> geometry -> heel-strike solve ->
/// timeline -> footstep plan -> uniform sampling. Deterministic.
GaitTrajectory plan_gait(const RunConfig& cfg);

/// CSV export: '#'-prefixed key=value metadata lines, exact header row,
/// 17-significant-digit floats, 0/1 booleans, LF newlines. Atomic
/// (temp file + rename).
void export_csv(const GaitTrajectory& traj, const std::string& path);

/// JSON export mirroring the CSV fields: top-level metadata object plus a
/// samples array. Atomic.
void export_json(const GaitTrajectory& traj, const std::string& path);

/// Parse a CSV file produced by export_csv (used for round-trip checks).
GaitTrajectory parse_csv(const std::string& path);

} // namespace gaitplan
