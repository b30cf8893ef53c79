#include "gaitplan/com_planner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gaitplan {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double residual_tol = 1e-10; // [m]
constexpr int max_bisect_iters = 200;
constexpr double denom_eps = 1e-12;

double deg2rad(double deg) { return deg * pi / 180.0; }

double checked_denominator(double denom, const char* what) {
    if (std::fabs(denom) < denom_eps) {
        std::ostringstream os;
        os << "singular heel-strike denominator (" << what
           << "): lateral geometry leaves no offset (A_y >= d_SW/2 regime)";
        throw error(errc::singularity, os.str());
    }
    return denom;
}

} // namespace

TransversePos com_transverse(double t, const StepParameters& sp) {
    return {sp.v_w * t, sp.a_y * std::cos(pi * sp.omega_step * t)};
}

double heel_strike_residual(double t, const StepParameters& sp, const BodyModel& bm,
                            const InterpretationConfig& cfg) {
    const double s = t / sp.t_step;
    const double cos_theta = std::cos(deg2rad(sp.theta_max_hs_deg));

    switch (cfg.hs_frame) {
    case HeelStrikeFrame::heel_shifted: {
        // CoM advance measured from the support heel (d behind the vCoR,
        // cos(theta_MaxHS)-projected) against the full step length; the
        // lateral oscillation enters with the ankle time shift also used by
        // the vertical trajectory.
        const double q = d_x_ank(bm, cfg) / sp.d_sl;
        const double denom =
            checked_denominator(sp.d_sw - sp.a_y * std::sin(pi * (s + q)), "heel_shifted");
        return sp.d_sl - sp.d_sw * (sp.v_w * t + bm.d * cos_theta) / denom;
    }
    case HeelStrikeFrame::landing: {
        // Step-local frame with origin at the planned landing vCoR: x is
        // negative before the CoM reaches it, the denominator is the
        // CoM-to-landing lateral offset (landing on the +d_SW/2 side, CoM
        // starting at -A_y over the support).
        const double y_local = -sp.a_y * std::cos(pi * s);
        const double denom = checked_denominator(y_local - 0.5 * sp.d_sw, "landing");
        const double x_local = sp.v_w * t - sp.d_sl;
        return sp.d_sl - bm.d * cos_theta - sp.d_sw * x_local / denom;
    }
    case HeelStrikeFrame::support: {
        // Verbatim reading: x from the support vCoR, support on the +d_SW/2
        // side. Kept for audits; the residual has no sign change.
        const double y_local = sp.a_y * std::cos(pi * s);
        const double denom = checked_denominator(y_local - 0.5 * sp.d_sw, "support");
        return sp.d_sl - bm.d * cos_theta - sp.d_sw * (sp.v_w * t) / denom;
    }
    }
    throw error(errc::invalid_input, "unknown heel-strike frame");
}

double solve_heel_strike_time(const StepParameters& sp, const BodyModel& bm,
                              const InterpretationConfig& cfg) {
    const double eps = 1e-6 * sp.t_step;
    double a = eps;
    double b = sp.t_step - eps;
    double fa = heel_strike_residual(a, sp, bm, cfg);
    double fb = heel_strike_residual(b, sp, bm, cfg);
    if (!(fa * fb < 0.0)) {
        std::ostringstream os;
        os << "heel-strike residual has no sign change on (" << a << ", " << b
           << ") s: residual(" << a << ") = " << fa << ", residual(" << b << ") = " << fb
           << " under frame " << to_string(cfg.hs_frame)
           << "; interpretation configuration is inconsistent";
        throw error(errc::no_root, os.str());
    }
    double m = 0.5 * (a + b);
    for (int i = 0; i < max_bisect_iters; ++i) {
        m = 0.5 * (a + b);
        const double fm = heel_strike_residual(m, sp, bm, cfg);
        if (std::fabs(fm) < residual_tol) {
            return m;
        }
        if (fa * fm < 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return m;
}

VerticalAmplitude vertical_amplitude(const StepParameters& sp, const BodyModel& bm,
                                     double t_hs0, const InterpretationConfig& cfg) {
    VerticalAmplitude out;
    HeelStrikeGeometry& g = out.geometry;

    if (cfg.az_formula == AzFormula::step_arc) {
        // Symmetric step-to-step transition: the CoM sits on the saddle
        // ordinate midway between the feet, the support pendulum is taut at
        // the apex. The drop is the pendulum arc over half a step.
        g.dx_hs = 0.5 * sp.d_sl;
        g.dy_hs = 0.0;
        const double radicand = bm.l_p0 * bm.l_p0 - g.dx_hs * g.dx_hs;
        if (radicand <= 0.0) {
            throw error(errc::geometry,
                        "half step length exceeds the pendulum length");
        }
        g.dist_com_cor_support_t0 = bm.l_p0;
        g.dist_com_cor_hs = std::sqrt(radicand);
        out.a_z = g.dist_com_cor_support_t0 - g.dist_com_cor_hs;
        return out;
    }

    // Verbatim distances: landing vCoR one step ahead of the support the CoM
    // crossed at t_0 = 0; support on the +d_SW/2 side in this step's frame.
    const double s = t_hs0 / sp.t_step;
    g.dx_hs = sp.d_sl - sp.v_w * t_hs0;
    g.dy_hs = std::fabs(sp.a_y * std::cos(pi * s) + 0.5 * sp.d_sw);

    const double radicand = (bm.l_p0 - g.dx_hs) * (bm.l_p0 - g.dx_hs) - g.dy_hs * g.dy_hs;
    if (radicand < 0.0) {
        std::ostringstream os;
        os << "heel-strike pendulum radicand negative: (L_P0 - dX_HS)^2 - dY_HS^2 = "
           << radicand;
        throw error(errc::geometry, os.str());
    }
    const double theta_sum = deg2rad(sp.theta_max_hs_deg + bm.theta_dah_deg);
    g.dist_com_cor_hs = std::sqrt(radicand) + bm.d * std::sin(theta_sum);

    // CoM at the alignment instant: over the support in x, at its lateral
    // extreme, at apex height.
    const double apex = z_max(sp, bm, cfg);
    const double lateral = 0.5 * sp.d_sw - sp.a_y;
    g.dist_com_cor_support_t0 = std::hypot(apex, lateral);

    const double raw = g.dist_com_cor_support_t0 - g.dist_com_cor_hs;
    if (raw < 0.0) {
        out.a_z = 0.0;
        out.clamped = true;
    } else {
        out.a_z = raw;
    }
    return out;
}

double z_max(const StepParameters& sp, const BodyModel& bm, const InterpretationConfig& cfg) {
    const double base = bm.l_p0 * bm.l_p0 - 0.25 * sp.d_sw * sp.d_sw;
    const double radicand = cfg.zmax_mode == ZMaxMode::squared
                                ? base - bm.d_x_ah * bm.d_x_ah
                                : base - bm.d_x_ah;
    if (radicand <= 0.0) {
        std::ostringstream os;
        os << "z_MAX radicand not positive: " << radicand << " under mode "
           << to_string(cfg.zmax_mode);
        throw error(errc::geometry, os.str());
    }
    return std::sqrt(radicand);
}

double com_vertical(double t, const StepTimeline& timeline, const StepParameters& sp,
                    const BodyModel& bm, const InterpretationConfig& cfg) {
    const double t_step = timeline.t_step;
    double tau = std::fmod(t, t_step);
    if (tau < 0.0) {
        tau += t_step;
    }

    const double shift = d_x_ank(bm, cfg) / sp.v_w;
    const double head = timeline.t_hs0 + shift;
    if (head <= 0.0) {
        throw error(errc::singularity, "t_HS0 + d_xAnk/v_W must be positive");
    }
    const double mid_span = t_step - timeline.t_hs0 - shift;
    if (mid_span <= 0.0) {
        throw error(errc::singularity,
                    "vertical mid segment collapsed: t_Step - t_HS0 - d_xAnk/v_W <= 0");
    }

    const double base = timeline.z_max - timeline.a_z;
    if (tau <= timeline.t_hs0) {
        return base + timeline.a_z * std::cos(pi * (tau + shift) / head);
    }
    if (tau <= t_step - shift) {
        const double c = std::cos(pi * (tau - timeline.t_hs0) / mid_span);
        // The verbatim middle segment restarts at +A_z, jumping 2*A_z at both
        // interior boundaries; the continuous mode negates it.
        return cfg.z_phase_mode == ZPhaseMode::continuous ? base - timeline.a_z * c
                                                          : base + timeline.a_z * c;
    }
    return base + timeline.a_z * std::cos(pi * (tau - t_step + shift) / head);
}

StepTimeline plan_step_timeline(const StepParameters& sp, const BodyModel& bm,
                                const InterpretationConfig& cfg) {
    StepTimeline tl;
    tl.t_0 = 0.0;
    tl.t_to_end = 0.0;
    tl.t_step = sp.t_step;
    tl.t_hs0 = solve_heel_strike_time(sp, bm, cfg);
    tl.a_z = vertical_amplitude(sp, bm, tl.t_hs0, cfg).a_z;
    tl.z_max = z_max(sp, bm, cfg);
    return tl;
}

} // namespace gaitplan
