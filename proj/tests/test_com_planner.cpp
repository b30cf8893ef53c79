#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "gaitplan/com_planner.hpp"

using namespace gaitplan;

namespace {

struct Fixture {
    StepParameters sp = regress_gait_parameters(1.2);
    BodyModel bm = derive_body_geometry(1.71, 0.0962212);
    InterpretationConfig cfg;
};

// Independent root oracle: linear scan of the residual at 1e-6 s resolution,
// returning the midpoint of the bracketing cell.
double brute_scan_root(const StepParameters& sp, const BodyModel& bm,
                       const InterpretationConfig& cfg) {
    const double dt = 1e-6;
    double prev_t = 1e-9;
    double prev_r = heel_strike_residual(prev_t, sp, bm, cfg);
    for (double t = dt; t < sp.t_step; t += dt) {
        const double r = heel_strike_residual(t, sp, bm, cfg);
        if (prev_r * r < 0.0) {
            return 0.5 * (prev_t + t);
        }
        prev_t = t;
        prev_r = r;
    }
    return -1.0;
}

} // namespace

TEST_CASE("transverse oscillator") {
    Fixture f;
    const TransversePos at0 = com_transverse(0.0, f.sp);
    CHECK(at0.x == 0.0);
    CHECK(at0.y == doctest::Approx(f.sp.a_y));

    const TransversePos at_step = com_transverse(f.sp.t_step, f.sp);
    CHECK(at_step.x == doctest::Approx(0.550376).epsilon(1e-9));
    CHECK(at_step.y == doctest::Approx(-0.012762).epsilon(1e-4));

    const TransversePos mid = com_transverse(0.5 * f.sp.t_step, f.sp);
    CHECK(mid.x == doctest::Approx(0.5 * f.sp.d_sl));
    CHECK(std::fabs(mid.y) < 1e-15);
}

TEST_CASE("transverse periodicity and bounds") {
    Fixture f;
    for (double t = 0.0; t < 4.0 * f.sp.t_step; t += 0.01) {
        const TransversePos a = com_transverse(t, f.sp);
        const TransversePos b = com_transverse(t + 2.0 * f.sp.t_step, f.sp);
        CHECK(std::fabs(b.y - a.y) < 1e-12);
        CHECK(b.x - a.x == doctest::Approx(2.0 * f.sp.d_sl).epsilon(1e-12));
        CHECK(std::fabs(a.y) <= f.sp.a_y + 1e-15);
    }
}

TEST_CASE("residual t-independent part in the landing frame") {
    Fixture f;
    f.cfg.hs_frame = HeelStrikeFrame::landing;
    // Frame-local x vanishes at t = t_step, leaving d_SL - d*cos(theta).
    const double r = heel_strike_residual(f.sp.t_step, f.sp, f.bm, f.cfg);
    CHECK(r == doctest::Approx(0.459125).epsilon(1e-4));
    CHECK(r == doctest::Approx(0.4591289094).epsilon(1e-9));
}

TEST_CASE("landing-frame root agrees with the scan oracle") {
    Fixture f;
    f.cfg.hs_frame = HeelStrikeFrame::landing;
    const double t_hs = solve_heel_strike_time(f.sp, f.bm, f.cfg);
    CHECK(std::fabs(heel_strike_residual(t_hs, f.sp, f.bm, f.cfg)) < 1e-10);
    CHECK(t_hs / f.sp.t_step == doctest::Approx(0.625346874).epsilon(1e-5));

    const double scanned = brute_scan_root(f.sp, f.bm, f.cfg);
    REQUIRE(scanned > 0.0);
    CHECK(std::fabs(t_hs - scanned) < 2e-6);
}

TEST_CASE("default frame root and residual quality across speeds") {
    for (double v : {0.6, 1.0, 1.2, 1.8, 2.2}) {
        const StepParameters sp = regress_gait_parameters(v);
        const BodyModel bm = derive_body_geometry(1.71, sp.d_sw);
        const InterpretationConfig cfg;
        const double t_hs = solve_heel_strike_time(sp, bm, cfg);
        CHECK(t_hs > 0.0);
        CHECK(t_hs < sp.t_step);
        CHECK(std::fabs(heel_strike_residual(t_hs, sp, bm, cfg)) < 1e-10);
        const double scanned = brute_scan_root(sp, bm, cfg);
        REQUIRE(scanned > 0.0);
        CHECK(std::fabs(t_hs - scanned) < 2e-6);
    }
}

TEST_CASE("default frame heel-strike fractions") {
    const InterpretationConfig cfg;
    const StepParameters sp12 = regress_gait_parameters(1.2);
    const BodyModel bm12 = derive_body_geometry(1.71, sp12.d_sw);
    const double s12 = solve_heel_strike_time(sp12, bm12, cfg) / sp12.t_step;
    CHECK(s12 == doctest::Approx(0.7755424).epsilon(2e-5));
    CHECK(s12 == doctest::Approx(0.80).epsilon(0.07)); // late-stance strike

    const StepParameters sp06 = regress_gait_parameters(0.6);
    const BodyModel bm06 = derive_body_geometry(1.71, sp06.d_sw);
    const double s06 = solve_heel_strike_time(sp06, bm06, cfg) / sp06.t_step;
    CHECK(s06 == doctest::Approx(0.5582415).epsilon(2e-5));
    CHECK(s06 == doctest::Approx(0.54).epsilon(0.05));
}

TEST_CASE("residual has exactly one sign change per step in rooted frames") {
    for (const HeelStrikeFrame frame :
         {HeelStrikeFrame::heel_shifted, HeelStrikeFrame::landing}) {
        for (double v : {0.6, 1.2, 2.2}) {
            const StepParameters sp = regress_gait_parameters(v);
            const BodyModel bm = derive_body_geometry(1.71, sp.d_sw);
            InterpretationConfig cfg;
            cfg.hs_frame = frame;
            int crossings = 0;
            double prev = heel_strike_residual(1e-9, sp, bm, cfg);
            for (double t = 1e-4; t < sp.t_step; t += 1e-4) {
                const double r = heel_strike_residual(t, sp, bm, cfg);
                if (prev * r < 0.0) {
                    ++crossings;
                }
                prev = r;
            }
            CHECK(crossings == 1);
        }
    }
}

TEST_CASE("verbatim support frame has no root and reports both endpoints") {
    Fixture f;
    f.cfg.hs_frame = HeelStrikeFrame::support;
    try {
        solve_heel_strike_time(f.sp, f.bm, f.cfg);
        FAIL("expected no-root error");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_root);
        const std::string msg = e.what();
        CHECK(msg.find("residual(") != std::string::npos);
        CHECK(msg.find("support") != std::string::npos);
    }
}

TEST_CASE("lateral singularity detected when the oscillation reaches the rail") {
    // Below ~0.32 m/s the oscillation amplitude exceeds d_SW/2 and the
    // landing-frame denominator crosses zero.
    const StepParameters sp = regress_gait_parameters(0.2);
    const BodyModel bm = derive_body_geometry(1.71, sp.d_sw);
    REQUIRE(sp.a_y > 0.5 * sp.d_sw);
    InterpretationConfig cfg;
    cfg.hs_frame = HeelStrikeFrame::landing;
    const double s_sing = std::acos(-sp.d_sw / (2.0 * sp.a_y)) / M_PI;
    CHECK_THROWS_AS(
        heel_strike_residual(s_sing * sp.t_step, sp, bm, cfg), error);
}

TEST_CASE("vertical amplitude at 1.2 m/s (default step-arc formula)") {
    Fixture f;
    const double t_hs = solve_heel_strike_time(f.sp, f.bm, f.cfg);
    const VerticalAmplitude va = vertical_amplitude(f.sp, f.bm, t_hs, f.cfg);
    CHECK(!va.clamped);
    CHECK(va.a_z == doctest::Approx(0.037967906).epsilon(1e-6));
    CHECK(std::fabs(va.a_z - 0.03468) < 0.015); // within 15 mm of the desired value

    const HeelStrikeGeometry& g = va.geometry;
    CHECK(g.dx_hs == doctest::Approx(0.5 * f.sp.d_sl));
    CHECK(g.dy_hs == 0.0);
    CHECK(g.dist_com_cor_support_t0 == doctest::Approx(f.bm.l_p0));
    CHECK(g.dist_com_cor_hs ==
          doctest::Approx(std::sqrt(f.bm.l_p0 * f.bm.l_p0 -
                                    0.25 * f.sp.d_sl * f.sp.d_sl)).epsilon(1e-12));
}

TEST_CASE("vertical amplitude verbatim formula at 1.2 m/s") {
    Fixture f;
    f.cfg.az_formula = AzFormula::as_written;
    const double t_hs = solve_heel_strike_time(f.sp, f.bm, f.cfg);
    const VerticalAmplitude va = vertical_amplitude(f.sp, f.bm, t_hs, f.cfg);
    CHECK(!va.clamped);
    CHECK(va.a_z == doctest::Approx(0.039559986).epsilon(1e-5));

    const HeelStrikeGeometry& g = va.geometry;
    CHECK(g.dist_com_cor_support_t0 ==
          doctest::Approx(std::hypot(1.0141912260553432, 0.5 * f.sp.d_sw - f.sp.a_y))
              .epsilon(1e-9));
    // Rotation correction term recovered from the stored distances.
    const double sqrt_part = std::sqrt((f.bm.l_p0 - g.dx_hs) * (f.bm.l_p0 - g.dx_hs) -
                                       g.dy_hs * g.dy_hs);
    CHECK(g.dist_com_cor_hs - sqrt_part == doctest::Approx(0.08335).epsilon(1e-3));
    CHECK((f.bm.l_p0 - g.dx_hs) * (f.bm.l_p0 - g.dx_hs) >= g.dy_hs * g.dy_hs);
}

TEST_CASE("vertical amplitude degenerate structure: overlapping projections") {
    // When both horizontal offsets vanish the verbatim distance collapses to
    // L_P0 + d*sin(theta_MaxHS + theta_DAH).
    Fixture f;
    f.cfg.az_formula = AzFormula::as_written;
    StepParameters sp = f.sp;
    sp.d_sw = 2.0 * sp.a_y; // dy = |A_y*cos(pi) + A_y| = 0 at t_hs0 = t_step
    const VerticalAmplitude va = vertical_amplitude(sp, f.bm, sp.t_step, f.cfg);
    const double theta_sum = (sp.theta_max_hs_deg + f.bm.theta_dah_deg) * M_PI / 180.0;
    CHECK(va.geometry.dx_hs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(va.geometry.dy_hs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(va.geometry.dist_com_cor_hs ==
          doctest::Approx(f.bm.l_p0 + f.bm.d * std::sin(theta_sum)).epsilon(1e-12));
}

TEST_CASE("verbatim vertical amplitude clamps negative drops with a diagnostic") {
    Fixture f;
    f.cfg.az_formula = AzFormula::as_written;
    const VerticalAmplitude va = vertical_amplitude(f.sp, f.bm, 0.999 * f.sp.t_step, f.cfg);
    CHECK(va.clamped);
    CHECK(va.a_z == 0.0);
}

TEST_CASE("vertical amplitude geometry errors on an impossible reach") {
    Fixture f;
    StepParameters sp = f.sp;

    SUBCASE("verbatim: dx near L_P0 makes the radicand negative") {
        f.cfg.az_formula = AzFormula::as_written;
        sp.d_sl = f.bm.l_p0;
        try {
            vertical_amplitude(sp, f.bm, 1e-6, f.cfg);
            FAIL("expected geometry error");
        } catch (const error& e) {
            CHECK(e.code() == errc::geometry);
        }
    }
    SUBCASE("step-arc: half step longer than the pendulum") {
        sp.d_sl = 2.1 * f.bm.l_p0;
        try {
            vertical_amplitude(sp, f.bm, 0.5 * sp.t_step, f.cfg);
            FAIL("expected geometry error");
        } catch (const error& e) {
            CHECK(e.code() == errc::geometry);
        }
    }
}

TEST_CASE("z_max modes") {
    Fixture f;
    InterpretationConfig cfg;
    cfg.zmax_mode = ZMaxMode::squared;
    CHECK(z_max(f.sp, f.bm, cfg) == doctest::Approx(1.014191).epsilon(1e-6));
    cfg.zmax_mode = ZMaxMode::as_written;
    CHECK(z_max(f.sp, f.bm, cfg) == doctest::Approx(0.993576).epsilon(1e-6));

    StepParameters flat = f.sp;
    flat.d_sw = 0.0;
    BodyModel bm = f.bm;
    bm.d_x_ah = 0.0;
    cfg.zmax_mode = ZMaxMode::squared;
    CHECK(z_max(flat, bm, cfg) == doctest::Approx(f.bm.l_p0).epsilon(1e-12));
}

TEST_CASE("vertical trajectory values and continuity") {
    Fixture f;
    const StepTimeline tl = plan_step_timeline(f.sp, f.bm, f.cfg);
    REQUIRE(tl.a_z > 0.0);
    REQUIRE(tl.t_hs0 > 0.0);
    REQUIRE(tl.t_hs0 < tl.t_step);

    const double shift =
        d_x_ank(f.bm, f.cfg) / f.sp.v_w;

    SUBCASE("minimum at heel strike, maximum over the support ankle") {
        CHECK(com_vertical(tl.t_hs0, tl, f.sp, f.bm, f.cfg) ==
              doctest::Approx(tl.z_max - 2.0 * tl.a_z).epsilon(1e-12));
        CHECK(com_vertical(tl.t_step - shift, tl, f.sp, f.bm, f.cfg) ==
              doctest::Approx(tl.z_max).epsilon(1e-12));
    }

    SUBCASE("interior boundaries are continuous in the default mode") {
        for (double tb : {tl.t_hs0, tl.t_step - shift}) {
            const double before = com_vertical(tb - 1e-9, tl, f.sp, f.bm, f.cfg);
            const double after = com_vertical(tb + 1e-9, tl, f.sp, f.bm, f.cfg);
            CHECK(std::fabs(after - before) < 1e-9);
        }
    }

    SUBCASE("verbatim mode jumps by 2*A_z at the heel strike") {
        InterpretationConfig verbatim = f.cfg;
        verbatim.z_phase_mode = ZPhaseMode::as_written;
        const double before = com_vertical(tl.t_hs0, tl, f.sp, f.bm, verbatim);
        const double after = com_vertical(tl.t_hs0 + 1e-12, tl, f.sp, f.bm, verbatim);
        CHECK(std::fabs(after - before) == doctest::Approx(2.0 * tl.a_z).epsilon(1e-6));
    }

    SUBCASE("periodicity and bounds") {
        for (double t = 0.0; t < 3.0 * tl.t_step; t += 1e-3) {
            const double z = com_vertical(t, tl, f.sp, f.bm, f.cfg);
            CHECK(z <= tl.z_max + 1e-12);
            CHECK(z >= tl.z_max - 2.0 * tl.a_z - 1e-12);
            CHECK(std::fabs(com_vertical(t + tl.t_step, tl, f.sp, f.bm, f.cfg) - z) < 1e-12);
        }
    }

    SUBCASE("zero amplitude flattens the trajectory") {
        StepTimeline flat = tl;
        flat.a_z = 0.0;
        for (double t = 0.0; t < tl.t_step; t += 0.01) {
            CHECK(com_vertical(t, flat, f.sp, f.bm, f.cfg) ==
                  doctest::Approx(tl.z_max).epsilon(1e-15));
        }
    }
}

TEST_CASE("vertical trajectory asymmetric at low speed") {
    const StepParameters sp = regress_gait_parameters(0.6);
    const BodyModel bm = derive_body_geometry(1.71, sp.d_sw);
    const InterpretationConfig cfg;
    const StepTimeline tl = plan_step_timeline(sp, bm, cfg);
    const double shift = d_x_ank(bm, cfg) / sp.v_w;
    const double fall = tl.t_hs0 + shift;            // previous max -> min
    const double rise = tl.t_step - tl.t_hs0 - shift; // min -> max
    CHECK(std::fabs(fall - rise) > 0.05 * tl.t_step);
}
