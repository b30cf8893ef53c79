#include "gaitplan/gait_parameters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gaitplan {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

SpeedRangeStatus validate_speed_range(double v_w, SpeedRangePolicy policy) {
    if (!std::isfinite(v_w)) {
        throw error(errc::invalid_input, "walking speed must be finite");
    }
    if (v_w >= speed_range_min && v_w <= speed_range_max) {
        return SpeedRangeStatus::ok;
    }
    if (policy == SpeedRangePolicy::reject) {
        return SpeedRangeStatus::error;
    }
    return SpeedRangeStatus::warning;
}

StepParameters regress_gait_parameters(double v_w, SpeedRangePolicy policy) {
    if (!std::isfinite(v_w) || v_w <= 0.0) {
        throw error(errc::invalid_input,
                    "walking speed must be positive and finite, got " + std::to_string(v_w));
    }
    if (validate_speed_range(v_w, policy) == SpeedRangeStatus::error) {
        std::ostringstream os;
        os << "walking speed " << v_w << " m/s outside the regression range ["
           << speed_range_min << ", " << speed_range_max << "] m/s";
        throw error(errc::range, os.str());
    }

    StepParameters sp;
    sp.v_w = v_w;
    sp.d_sw = -0.009149 * v_w + 0.1072;
    sp.d_sl = 2.0 * (0.09399 * v_w + 0.1624);
    sp.theta_max_hs_deg = -1.162 * v_w + 9.198;
    // Step time: the CoM advances one step length per step at constant speed.
    sp.t_step = sp.d_sl / v_w;
    sp.omega_step = 1.0 / sp.t_step;
    sp.a_y = sp.d_sw / (2.0 * pi * sp.omega_step * sp.d_sl);
    return sp;
}

BodyModel derive_body_geometry(double h_body, double d_sw) {
    if (!std::isfinite(h_body) || h_body <= 0.0) {
        throw error(errc::invalid_input, "body height must be positive and finite");
    }

    BodyModel bm;
    bm.h_body = h_body;
    bm.l_p0 = 0.5943 * h_body;
    bm.d = 0.0921;
    bm.d_x_ah = 0.0253 * h_body;
    bm.d_z_a = 0.039 * h_body;
    bm.d_x_a = bm.d - bm.d_x_ah;
    bm.d_x_amt = 2.0 * bm.d - bm.d_x_ah;

    const double radicand =
        bm.l_p0 * bm.l_p0 - 0.25 * d_sw * d_sw - bm.d_x_a * bm.d_x_a;
    if (radicand <= 0.0) {
        std::ostringstream os;
        os << "leg length undefined: L_P0^2 - (d_SW/2)^2 - d_xA^2 = " << radicand
           << " <= 0";
        throw error(errc::geometry, os.str());
    }
    bm.l_leg = std::sqrt(radicand) - bm.d_z_a;

    bm.d_ah = std::hypot(bm.d_z_a, bm.d_x_ah);
    bm.theta_dah_deg = std::atan2(bm.d_z_a, bm.d_x_ah) * 180.0 / pi;
    bm.d_amt = std::hypot(bm.d_z_a, bm.d_x_amt);
    bm.theta_dmt_deg = std::atan2(bm.d_z_a, bm.d_x_amt) * 180.0 / pi;
    return bm;
}

double d_x_ank(const BodyModel& bm, const InterpretationConfig& cfg) {
    return cfg.d_x_ank_source == DxAnkSource::d_x_ah ? bm.d_x_ah : bm.d_x_a;
}

const char* to_string(ZPhaseMode m) {
    return m == ZPhaseMode::continuous ? "continuous" : "as_written";
}
const char* to_string(ZMaxMode m) {
    return m == ZMaxMode::squared ? "squared" : "as_written";
}
const char* to_string(DxAnkSource m) {
    return m == DxAnkSource::d_x_ah ? "d_xAH" : "d_xA";
}
const char* to_string(SpeedRangePolicy m) {
    return m == SpeedRangePolicy::warn ? "warn" : "reject";
}
const char* to_string(HeelStrikeFrame m) {
    switch (m) {
    case HeelStrikeFrame::heel_shifted: return "heel_shifted";
    case HeelStrikeFrame::landing: return "landing";
    case HeelStrikeFrame::support: return "support";
    }
    return "?";
}
const char* to_string(AzFormula m) {
    return m == AzFormula::step_arc ? "step_arc" : "as_written";
}

} // namespace gaitplan
