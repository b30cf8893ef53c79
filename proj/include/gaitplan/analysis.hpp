#pragma once

#include <utility>
#include <vector>

#include "gaitplan/com_planner.hpp"
#include "gaitplan/trajectory_types.hpp"

namespace gaitplan {

struct GaitMetrics {
    double v_w = 0.0;
    double ds_pct_gc = 0.0;      // double support [% gait cycle]
    double contact_pct_gc = 0.0; // foot ground contact [% gait cycle]
    double a_y_measured = 0.0;   // [m]
    double a_z_measured = 0.0;   // [m]
    double t_hs0_norm = 0.0;     // t_hs0 / t_step
};

struct PolyFit {
    int degree = 0;
    std::vector<double> coefficients; // highest degree first
    double r_squared = 0.0;
};

/// Double-support and per-foot contact percentages of the gait cycle from the
/// step timeline: ds = (1 - t_hs0/t_step)*100, contact = 50 + ds/2.
std::pair<double, double> gait_phase_metrics(const StepTimeline& timeline);

/// Peak-to-peak half-amplitudes of y and z over one full gait cycle. Uses the
/// second cycle when the trajectory is long enough, the first otherwise.
std::pair<double, double> extract_amplitudes(const GaitTrajectory& traj);

/// Validation regressions for the mediolateral and vertical CoM amplitudes.
std::pair<double, double> desired_amplitudes(double v_w);

/// Least-squares polynomial fit (degree 1 or 2) with the conventional
/// R^2 = 1 - SS_res/SS_tot about the sample mean.
PolyFit fit_polynomial(const std::vector<std::pair<double, double>>& samples, int degree);

/// One plan-and-measure pass per speed over [v_min, v_max] in steps of step.
std::vector<GaitMetrics> speed_sweep(double v_min, double v_max, double step,
                                     double h_body, const InterpretationConfig& cfg = {});

/// Sampling-based double-support percentage (counts both-contact samples);
/// cross-check for the closed-form metric.
double ds_pct_sampled(const GaitTrajectory& traj);

} // namespace gaitplan
