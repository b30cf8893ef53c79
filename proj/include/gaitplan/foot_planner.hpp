#pragma once

#include <vector>

#include "gaitplan/com_planner.hpp"

namespace gaitplan {

enum class Side { left, right };

struct Footstep {
    Side side = Side::left;
    double x = 0.0;               // vCoR ground position [m]
    double y = 0.0;               // +-d_sw/2 [m]
    double heel_strike_time = 0.0;// [s]; negative for the pre-gait placements
    double toe_off_end_time = 0.0;// [s]
};

struct FootstepPlan {
    std::vector<Footstep> steps;  // placements k = 0..n_steps-1 at x = k*d_sl
    double d_sl = 0.0;
    double d_sw = 0.0;
    double t_step = 0.0;
    double t_hs0 = 0.0;           // step-local heel-strike instant [s]
    double touchdown_shortfall = 0.0; // d*cos(theta_MaxHS): vCoR advance closed by the HS rotation [m]
};

struct ContactState {
    bool left_contact = false;
    bool right_contact = false;
};

/// Slope of the saddle ordinate through com and ref in the transverse plane.
/// Returns +-infinity when the two points are x-aligned (vertical ordinate).
double saddle_slope(TransversePos com, TransversePos ref);

/// Footstep sequence with alternating sides, spacing d_sl in x and +-d_sw/2
/// in y. Placement k lands at (k-1)*t_step + t_hs0 and leaves the ground at
/// (k+1)*t_step.
FootstepPlan plan_footsteps(const StepParameters& sp, int n_steps, const BodyModel& bm,
                            const StepTimeline& timeline);

/// Anteroposterior vCoR position of one foot: constant at its placement
/// during stance, saddle-slope-driven during swing, constant at the next
/// placement after heel strike.
double vcor_x(double t, Side foot, const FootstepPlan& plan, const StepParameters& sp);

/// Which feet are on the ground at time t. Both flags are true exactly during
/// double support; at least one is always true.
ContactState contact_state(double t, const FootstepPlan& plan);

} // namespace gaitplan
