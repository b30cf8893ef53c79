#include "gaitplan/foot_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gaitplan {

namespace {

constexpr double pi = std::numbers::pi;

int step_index(double t, double t_step) {
    return static_cast<int>(std::floor(t / t_step));
}

// Side holding placement k: even placements on the +y rail (left).
Side placement_side(int k) {
    // ((k % 2) + 2) % 2 keeps negative indices (pre-gait placement) correct.
    return (((k % 2) + 2) % 2) == 0 ? Side::left : Side::right;
}

double rail_y(Side side, double d_sw) {
    return side == Side::left ? 0.5 * d_sw : -0.5 * d_sw;
}

// Intersection displacement of the saddle ordinate (support -> CoM line) with
// the swing-side rail, measured forward from the support vCoR. Zero when the
// CoM is x-aligned with the support.
double saddle_intersection_advance(double tau, int k, const StepParameters& sp) {
    const double x_rel = sp.v_w * tau; // CoM ahead of the support
    const Side support = placement_side(k);
    const double y_support = rail_y(support, sp.d_sw);
    const double y_swing_rail = -y_support;
    const double y_com = sp.a_y * std::cos(pi * sp.omega_step * (k * sp.t_step + tau));
    const double dy = y_com - y_support; // never zero: |y_com| <= A_y < d_sw/2
    return (y_swing_rail - y_support) * x_rel / dy;
}

} // namespace

double saddle_slope(TransversePos com, TransversePos ref) {
    const double dx = com.x - ref.x;
    const double dy = com.y - ref.y;
    if (dx == 0.0 && dy == 0.0) {
        throw error(errc::invalid_input, "saddle slope undefined for coincident points");
    }
    if (dx == 0.0) {
        return std::copysign(std::numeric_limits<double>::infinity(),
                             dy == 0.0 ? 1.0 : dy);
    }
    return dy / dx;
}

FootstepPlan plan_footsteps(const StepParameters& sp, int n_steps, const BodyModel& bm,
                            const StepTimeline& timeline) {
    if (n_steps < 2) {
        throw error(errc::invalid_input,
                    "footstep plan needs at least 2 steps, got " + std::to_string(n_steps));
    }
    FootstepPlan plan;
    plan.d_sl = sp.d_sl;
    plan.d_sw = sp.d_sw;
    plan.t_step = sp.t_step;
    plan.t_hs0 = timeline.t_hs0;
    plan.touchdown_shortfall =
        bm.d * std::cos(sp.theta_max_hs_deg * pi / 180.0);
    plan.steps.reserve(static_cast<size_t>(n_steps));
    for (int k = 0; k < n_steps; ++k) {
        Footstep f;
        f.side = placement_side(k);
        f.x = k * sp.d_sl;
        f.y = rail_y(f.side, sp.d_sw);
        f.heel_strike_time = (k - 1) * sp.t_step + timeline.t_hs0;
        f.toe_off_end_time = (k + 1) * sp.t_step;
        plan.steps.push_back(f);
    }
    return plan;
}

double vcor_x(double t, Side foot, const FootstepPlan& plan, const StepParameters& sp) {
    const int k = step_index(t, plan.t_step);
    const double tau = t - k * plan.t_step;

    if (placement_side(k) == foot) {
        // Support foot of this step: planted at its placement.
        return k * plan.d_sl;
    }

    // Other foot: swings from placement k-1 toward placement k+1 during
    // [0, t_hs0), planted at the new placement afterwards.
    if (tau >= plan.t_hs0) {
        return (k + 1) * plan.d_sl;
    }
    const double advance = 2.0 * plan.d_sl - plan.touchdown_shortfall;
    const double at_hs = saddle_intersection_advance(plan.t_hs0, k, sp);
    if (!(at_hs > 0.0)) {
        throw error(errc::singularity, "saddle intersection did not advance by heel strike");
    }
    double frac = saddle_intersection_advance(tau, k, sp) / at_hs;
    // Guard against slope sign flips from numerical noise near the
    // vertical-slope boundary.
    frac = std::clamp(frac, 0.0, 1.0);
    return (k - 1) * plan.d_sl + advance * frac;
}

ContactState contact_state(double t, const FootstepPlan& plan) {
    const int k = step_index(t, plan.t_step);
    const double tau = t - k * plan.t_step;

    const Side support = placement_side(k);
    ContactState cs;
    const bool other_contact = tau >= plan.t_hs0; // landed; trailing lifted at tau = 0
    if (support == Side::left) {
        cs.left_contact = true;
        cs.right_contact = other_contact;
    } else {
        cs.right_contact = true;
        cs.left_contact = other_contact;
    }
    return cs;
}

} // namespace gaitplan
