#include "gaitplan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gaitplan/trajectory.hpp"

namespace gaitplan {

std::pair<double, double> gait_phase_metrics(const StepTimeline& timeline) {
    const double ds = (1.0 - timeline.t_hs0 / timeline.t_step) * 100.0;
    return {ds, 50.0 + 0.5 * ds};
}

std::pair<double, double> extract_amplitudes(const GaitTrajectory& traj) {
    if (traj.samples.size() < 2) {
        throw error(errc::insufficient_data, "trajectory has fewer than two samples");
    }
    const double t_step = regress_gait_parameters(traj.meta.v_w).t_step;
    const double cycle = 2.0 * t_step;
    const double t0 = traj.samples.front().t;
    const double span = traj.samples.back().t - t0;
    if (span + 1e-12 < cycle) {
        std::ostringstream os;
        os << "trajectory spans " << span << " s, shorter than one gait cycle (" << cycle
           << " s)";
        throw error(errc::insufficient_data, os.str());
    }
    // Steady state by construction; measure over the second cycle when
    // available to keep the policy uniform.
    const double lo = (span + 1e-12 >= 2.0 * cycle) ? t0 + cycle : t0;
    const double hi = lo + cycle;

    double y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
    double z_min = y_min, z_max_seen = -y_min;
    for (const auto& s : traj.samples) {
        if (s.t < lo - 1e-12 || s.t > hi + 1e-12) {
            continue;
        }
        y_min = std::min(y_min, s.y_com);
        y_max = std::max(y_max, s.y_com);
        z_min = std::min(z_min, s.z_com);
        z_max_seen = std::max(z_max_seen, s.z_com);
    }
    return {0.5 * (y_max - y_min), 0.5 * (z_max_seen - z_min)};
}

std::pair<double, double> desired_amplitudes(double v_w) {
    if (!(v_w >= 0.0)) { // v_w = 0 yields the regression intercepts
        throw error(errc::invalid_input, "desired amplitudes need a non-negative speed");
    }
    const double a_y_des = 0.011 * v_w * v_w - 0.041 * v_w + 0.051;
    const double a_z_des = 0.012 * v_w * v_w - 0.003 * v_w + 0.021;
    return {a_y_des, a_z_des};
}

PolyFit fit_polynomial(const std::vector<std::pair<double, double>>& samples, int degree) {
    if (degree != 1 && degree != 2) {
        throw error(errc::invalid_input, "fit degree must be 1 or 2");
    }
    const int n_coef = degree + 1;
    if (samples.size() < static_cast<size_t>(n_coef)) {
        throw error(errc::insufficient_data, "need at least degree + 1 samples");
    }

    // Normal equations in extended precision; tiny system (<= 3x3).
    long double ata[3][3] = {};
    long double atb[3] = {};
    for (const auto& [x, y] : samples) {
        long double powers[3] = {1.0L, x, static_cast<long double>(x) * x};
        for (int i = 0; i < n_coef; ++i) {
            for (int j = 0; j < n_coef; ++j) {
                ata[i][j] += powers[i] * powers[j];
            }
            atb[i] += powers[i] * y;
        }
    }

    // Gaussian elimination with partial pivoting.
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < n_coef; ++col) {
        int piv = col;
        for (int r = col + 1; r < n_coef; ++r) {
            if (std::fabs(static_cast<double>(ata[idx[r]][col])) >
                std::fabs(static_cast<double>(ata[idx[piv]][col]))) {
                piv = r;
            }
        }
        std::swap(idx[col], idx[piv]);
        const long double p = ata[idx[col]][col];
        if (std::fabs(static_cast<double>(p)) < 1e-30) {
            throw error(errc::singular_fit,
                        "rank-deficient normal system (x values not distinct enough)");
        }
        for (int r = col + 1; r < n_coef; ++r) {
            const long double f = ata[idx[r]][col] / p;
            for (int c = col; c < n_coef; ++c) {
                ata[idx[r]][c] -= f * ata[idx[col]][c];
            }
            atb[idx[r]] -= f * atb[idx[col]];
        }
    }
    long double coef_low[3] = {}; // ascending degree
    for (int row = n_coef - 1; row >= 0; --row) {
        long double acc = atb[idx[row]];
        for (int c = row + 1; c < n_coef; ++c) {
            acc -= ata[idx[row]][c] * coef_low[c];
        }
        coef_low[row] = acc / ata[idx[row]][row];
    }

    PolyFit fit;
    fit.degree = degree;
    fit.coefficients.resize(static_cast<size_t>(n_coef));
    for (int i = 0; i < n_coef; ++i) {
        fit.coefficients[static_cast<size_t>(i)] =
            static_cast<double>(coef_low[n_coef - 1 - i]); // highest degree first
    }

    long double mean = 0.0L;
    for (const auto& s : samples) {
        mean += s.second;
    }
    mean /= static_cast<long double>(samples.size());
    long double ss_res = 0.0L, ss_tot = 0.0L;
    for (const auto& [x, y] : samples) {
        long double yhat = 0.0L;
        for (int i = 0; i < n_coef; ++i) {
            yhat = yhat * x + coef_low[n_coef - 1 - i];
        }
        ss_res += (y - yhat) * (y - yhat);
        ss_tot += (y - mean) * (y - mean);
    }
    fit.r_squared =
        ss_tot == 0.0L ? 1.0 : static_cast<double>(1.0L - ss_res / ss_tot);
    return fit;
}

std::vector<GaitMetrics> speed_sweep(double v_min, double v_max, double step,
                                     double h_body, const InterpretationConfig& cfg) {
    if (!(step > 0.0)) {
        throw error(errc::invalid_input, "sweep step must be positive");
    }
    if (v_min > v_max) {
        throw error(errc::invalid_input, "sweep needs v_min <= v_max");
    }
    std::vector<GaitMetrics> out;
    const double tol = step * 1e-6;
    for (int i = 0;; ++i) {
        const double v = v_min + i * step;
        if (v > v_max + tol) {
            break;
        }
        RunConfig rc;
        rc.v_w = v;
        rc.h_body = h_body;
        rc.n_steps = 4;
        rc.dt = 1e-3;
        rc.interp = cfg;
        const GaitTrajectory traj = plan_gait(rc);

        const StepParameters sp = regress_gait_parameters(v, cfg.speed_range_policy);
        const BodyModel bm = derive_body_geometry(h_body, sp.d_sw);
        const StepTimeline tl = plan_step_timeline(sp, bm, cfg);
        const auto [ds, contact] = gait_phase_metrics(tl);
        const auto [a_y, a_z] = extract_amplitudes(traj);

        GaitMetrics m;
        m.v_w = v;
        m.ds_pct_gc = ds;
        m.contact_pct_gc = contact;
        m.a_y_measured = a_y;
        m.a_z_measured = a_z;
        m.t_hs0_norm = tl.t_hs0 / tl.t_step;
        out.push_back(m);
    }
    return out;
}

double ds_pct_sampled(const GaitTrajectory& traj) {
    if (traj.samples.empty()) {
        throw error(errc::insufficient_data, "empty trajectory");
    }
    size_t both = 0;
    for (const auto& s : traj.samples) {
        if (s.left_contact && s.right_contact) {
            ++both;
        }
    }
    return 100.0 * static_cast<double>(both) / static_cast<double>(traj.samples.size());
}

} // namespace gaitplan
