#pragma once

#include <string>

#include "gaitplan/errors.hpp"

namespace gaitplan {

/// Speed-derived step quantities. Angles are stored in degrees, lengths in
/// metres, times in seconds.
struct StepParameters {
    double v_w = 0.0;             // walking speed [m/s]
    double d_sw = 0.0;            // step width [m]
    double d_sl = 0.0;            // step length [m]
    double theta_max_hs_deg = 0.0;// maximum heel-strike angle [deg]
    double t_step = 0.0;          // step duration [s]
    double omega_step = 0.0;      // step frequency [1/s], omega_step * t_step == 1
    double a_y = 0.0;             // mediolateral CoM amplitude [m]
};

/// Anthropometric lengths and foot-geometry angles derived from body height.
struct BodyModel {
    double h_body = 0.0;        // body height [m]
    double l_p0 = 0.0;          // maximum pendulum length [m]
    double d = 0.0;             // CoR-to-heel/metatarsus distance [m], constant
    double d_x_ah = 0.0;        // ankle-to-heel anteroposterior distance [m]
    double d_z_a = 0.0;         // ankle-to-CoR vertical distance [m]
    double d_x_a = 0.0;         // ankle-to-CoR anteroposterior distance [m]
    double d_x_amt = 0.0;       // ankle-to-metatarsus anteroposterior distance [m]
    double l_leg = 0.0;         // leg segment length [m]
    double d_ah = 0.0;          // ankle-heel diagonal [m]
    double theta_dah_deg = 0.0; // ankle-heel diagonal angle [deg]
    double d_amt = 0.0;         // ankle-metatarsus diagonal [m]
    double theta_dmt_deg = 0.0; // ankle-metatarsus diagonal angle [deg]
};

enum class ZPhaseMode { continuous, as_written };
enum class ZMaxMode { squared, as_written };
enum class DxAnkSource { d_x_ah, d_x_a };
enum class SpeedRangePolicy { warn, reject };

/// Frame/phase convention used when solving the heel-strike condition.
///  - heel_shifted: CoM advance measured from the support heel against the
///    full step length, lateral oscillation entering with the ankle time
///    shift. Reproduces the published double-support table; default.
///  - landing: step-local frame with origin at the planned landing vCoR.
///  - support: verbatim support-foot frame; has no root (kept for audits,
///    the solver reports a no-root error under it).
enum class HeelStrikeFrame { heel_shifted, landing, support };

/// Vertical-amplitude formula.
///  - step_arc: symmetric pendulum drop at the step-to-step transition,
///    A_z = L_P0 - sqrt(L_P0^2 - (d_SL/2)^2). Tracks the validation
///    regressions and grows with speed; default.
///  - as_written: verbatim apex/heel-strike distance difference with the
///    (L_P0 - dX)^2 - dY^2 radicand and the rotation correction term.
enum class AzFormula { step_arc, as_written };

/// Explicit switches for every convention the source equations leave open.
struct InterpretationConfig {
    ZPhaseMode z_phase_mode = ZPhaseMode::continuous;
    ZMaxMode zmax_mode = ZMaxMode::squared;
    DxAnkSource d_x_ank_source = DxAnkSource::d_x_ah;
    SpeedRangePolicy speed_range_policy = SpeedRangePolicy::warn;
    HeelStrikeFrame hs_frame = HeelStrikeFrame::heel_shifted;
    AzFormula az_formula = AzFormula::step_arc;
};

enum class SpeedRangeStatus { ok, warning, error };

/// Validity window of the step regressions [m/s].
inline constexpr double speed_range_min = 0.6;
inline constexpr double speed_range_max = 2.2;

SpeedRangeStatus validate_speed_range(double v_w,
                                      SpeedRangePolicy policy = SpeedRangePolicy::warn);

StepParameters regress_gait_parameters(double v_w,
                                       SpeedRangePolicy policy = SpeedRangePolicy::warn);

BodyModel derive_body_geometry(double h_body, double d_sw);

/// Ankle anteroposterior offset selected by the configuration.
double d_x_ank(const BodyModel& bm, const InterpretationConfig& cfg);

const char* to_string(ZPhaseMode m);
const char* to_string(ZMaxMode m);
const char* to_string(DxAnkSource m);
const char* to_string(SpeedRangePolicy m);
const char* to_string(HeelStrikeFrame m);
const char* to_string(AzFormula m);

} // namespace gaitplan
