#pragma once

#include "gaitplan/gait_parameters.hpp"

namespace gaitplan {

/// Per-step event times and vertical-trajectory constants. The step-local
/// clock runs from the alignment instant (swing foot passing the support
/// foot, CoM over the support in x, lateral excursion at its maximum).
struct StepTimeline {
    double t_0 = 0.0;      // swing-start instant within step [s]
    double t_hs0 = 0.0;    // heel-strike instant within step [s]
    double t_to_end = 0.0; // toe-off completion instant within step [s]
    double t_step = 0.0;   // step duration [s]
    double a_z = 0.0;      // vertical CoM amplitude [m]
    double z_max = 0.0;    // maximum CoM height [m]
};

struct HeelStrikeGeometry {
    double dx_hs = 0.0;                 // CoM-to-landing-CoR anteroposterior distance [m]
    double dy_hs = 0.0;                 // CoM-to-landing-CoR mediolateral distance [m]
    double dist_com_cor_hs = 0.0;       // CoM-to-landing-CoR distance [m]
    double dist_com_cor_support_t0 = 0.0; // CoM-to-support-CoR distance at t_0 [m]
};

struct TransversePos {
    double x = 0.0;
    double y = 0.0;
};

struct VerticalAmplitude {
    double a_z = 0.0;
    HeelStrikeGeometry geometry;
    bool clamped = false; // true when a negative raw amplitude was clamped to zero
};

/// Transverse CoM position at time t: x advances at constant speed, y is the
/// step-frequency harmonic oscillation.
TransversePos com_transverse(double t, const StepParameters& sp);

/// Left-hand side of the heel-strike condition at step-local time t under the
/// configured frame convention.
double heel_strike_residual(double t, const StepParameters& sp, const BodyModel& bm,
                            const InterpretationConfig& cfg);

/// Bisection root of the heel-strike residual on (0, t_step).
/// Absolute residual tolerance 1e-10 m, bracket eps = 1e-6 * t_step.
double solve_heel_strike_time(const StepParameters& sp, const BodyModel& bm,
                              const InterpretationConfig& cfg = {});

/// Vertical CoM amplitude from the apex/heel-strike pendulum distances.
/// A negative raw value is clamped to zero and flagged.
VerticalAmplitude vertical_amplitude(const StepParameters& sp, const BodyModel& bm,
                                     double t_hs0, const InterpretationConfig& cfg = {});

/// Maximum CoM height, reached when the CoM passes over the support ankle.
double z_max(const StepParameters& sp, const BodyModel& bm,
             const InterpretationConfig& cfg = {});

/// Piecewise-cosine vertical CoM trajectory. t may be any time; it is folded
/// into [0, t_step).
double com_vertical(double t, const StepTimeline& timeline, const StepParameters& sp,
                    const BodyModel& bm, const InterpretationConfig& cfg = {});

/// Solve the heel strike and assemble the full per-step timeline.
StepTimeline plan_step_timeline(const StepParameters& sp, const BodyModel& bm,
                                const InterpretationConfig& cfg = {});

} // namespace gaitplan
