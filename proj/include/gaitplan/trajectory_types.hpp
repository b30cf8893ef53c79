#pragma once

#include <string>
#include <vector>

#include "gaitplan/gait_parameters.hpp"

namespace gaitplan {

struct TrajectorySample {
    double t = 0.0;
    double x_com = 0.0, y_com = 0.0, z_com = 0.0;
    double x_vcor_l = 0.0, y_vcor_l = 0.0;
    double x_vcor_r = 0.0, y_vcor_r = 0.0;
    bool left_contact = false;
    bool right_contact = false;
};

struct TrajectoryMeta {
    int schema_version = 1;
    double v_w = 0.0;
    double h_body = 0.0;
    double dt = 0.0;
    int n_steps = 0;
    InterpretationConfig interp;
};

/// Uniformly sampled time series of CoM position, vCoR positions and contact
/// flags. Timestamps are i*dt, strictly increasing.
struct GaitTrajectory {
    TrajectoryMeta meta;
    std::vector<TrajectorySample> samples;
};

enum class OutputFormat { csv, json };

struct RunConfig {
    double v_w = 1.2;
    double h_body = 1.71;
    int n_steps = 4;
    double dt = 0.005;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;
    InterpretationConfig interp;
};

} // namespace gaitplan
