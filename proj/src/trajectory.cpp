#include "gaitplan/trajectory.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gaitplan/com_planner.hpp"
#include "gaitplan/foot_planner.hpp"
#include "json.hpp"

namespace gaitplan {

namespace {

const char* csv_header =
    "t,x_com,y_com,z_com,x_vcor_l,y_vcor_l,x_vcor_r,y_vcor_r,left_contact,right_contact";

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw error(errc::io, "cannot open " + tmp + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw error(errc::io, "write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw error(errc::io, "rename to " + path + " failed: " + std::strerror(errno));
    }
}

void append_meta(std::ostringstream& os, const TrajectoryMeta& m) {
    os << "# schema_version=" << m.schema_version << "\n";
    os << "# v_w=" << fmt17(m.v_w) << "\n";
    os << "# h_body=" << fmt17(m.h_body) << "\n";
    os << "# dt=" << fmt17(m.dt) << "\n";
    os << "# n_steps=" << m.n_steps << "\n";
    os << "# z_phase_mode=" << to_string(m.interp.z_phase_mode) << "\n";
    os << "# zmax_mode=" << to_string(m.interp.zmax_mode) << "\n";
    os << "# d_xank_source=" << to_string(m.interp.d_x_ank_source) << "\n";
    os << "# speed_range_policy=" << to_string(m.interp.speed_range_policy) << "\n";
    os << "# hs_frame=" << to_string(m.interp.hs_frame) << "\n";
    os << "# az_formula=" << to_string(m.interp.az_formula) << "\n";
}

} // namespace

GaitTrajectory plan_gait(const RunConfig& cfg) {
    if (!(cfg.dt > 0.0)) {
        throw error(errc::invalid_input, "dt must be positive");
    }
    const StepParameters sp =
        regress_gait_parameters(cfg.v_w, cfg.interp.speed_range_policy);
    if (!(cfg.dt < sp.t_step / 10.0)) {
        std::ostringstream os;
        os << "dt = " << cfg.dt << " s too coarse: need dt < t_step/10 = "
           << sp.t_step / 10.0 << " s";
        throw error(errc::invalid_input, os.str());
    }
    const BodyModel bm = derive_body_geometry(cfg.h_body, sp.d_sw);
    const StepTimeline tl = plan_step_timeline(sp, bm, cfg.interp);
    const FootstepPlan plan = plan_footsteps(sp, cfg.n_steps, bm, tl);

    GaitTrajectory traj;
    traj.meta.v_w = cfg.v_w;
    traj.meta.h_body = cfg.h_body;
    traj.meta.dt = cfg.dt;
    traj.meta.n_steps = cfg.n_steps;
    traj.meta.interp = cfg.interp;

    const double horizon = cfg.n_steps * sp.t_step;
    const long n = static_cast<long>(std::ceil(horizon / cfg.dt)) + 1;
    traj.samples.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * cfg.dt;
        TrajectorySample s;
        s.t = t;
        const TransversePos p = com_transverse(t, sp);
        s.x_com = p.x;
        s.y_com = p.y;
        s.z_com = com_vertical(t, tl, sp, bm, cfg.interp);
        s.x_vcor_l = vcor_x(t, Side::left, plan, sp);
        s.y_vcor_l = 0.5 * sp.d_sw;
        s.x_vcor_r = vcor_x(t, Side::right, plan, sp);
        s.y_vcor_r = -0.5 * sp.d_sw;
        const ContactState cs = contact_state(t, plan);
        s.left_contact = cs.left_contact;
        s.right_contact = cs.right_contact;
        traj.samples.push_back(s);
    }
    return traj;
}

void export_csv(const GaitTrajectory& traj, const std::string& path) {
    std::ostringstream os;
    append_meta(os, traj.meta);
    os << csv_header << "\n";
    for (const auto& s : traj.samples) {
        os << fmt17(s.t) << ',' << fmt17(s.x_com) << ',' << fmt17(s.y_com) << ','
           << fmt17(s.z_com) << ',' << fmt17(s.x_vcor_l) << ',' << fmt17(s.y_vcor_l) << ','
           << fmt17(s.x_vcor_r) << ',' << fmt17(s.y_vcor_r) << ','
           << (s.left_contact ? 1 : 0) << ',' << (s.right_contact ? 1 : 0) << "\n";
    }
    atomic_write(path, os.str());
}

void export_json(const GaitTrajectory& traj, const std::string& path) {
    nlohmann::json meta{
        {"schema_version", traj.meta.schema_version},
        {"v_w", traj.meta.v_w},
        {"h_body", traj.meta.h_body},
        {"dt", traj.meta.dt},
        {"n_steps", traj.meta.n_steps},
        {"z_phase_mode", to_string(traj.meta.interp.z_phase_mode)},
        {"zmax_mode", to_string(traj.meta.interp.zmax_mode)},
        {"d_xank_source", to_string(traj.meta.interp.d_x_ank_source)},
        {"speed_range_policy", to_string(traj.meta.interp.speed_range_policy)},
        {"hs_frame", to_string(traj.meta.interp.hs_frame)},
        {"az_formula", to_string(traj.meta.interp.az_formula)},
    };
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : traj.samples) {
        samples.push_back({{"t", s.t},
                           {"x_com", s.x_com},
                           {"y_com", s.y_com},
                           {"z_com", s.z_com},
                           {"x_vcor_l", s.x_vcor_l},
                           {"y_vcor_l", s.y_vcor_l},
                           {"x_vcor_r", s.x_vcor_r},
                           {"y_vcor_r", s.y_vcor_r},
                           {"left_contact", s.left_contact},
                           {"right_contact", s.right_contact}});
    }
    nlohmann::json doc{{"metadata", meta}, {"samples", samples}};
    atomic_write(path, doc.dump(2) + "\n");
}

GaitTrajectory parse_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error(errc::io, "cannot open " + path);
    }
    GaitTrajectory traj;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = line.substr(2, eq - 2);
            const std::string val = line.substr(eq + 1);
            if (key == "v_w") traj.meta.v_w = std::stod(val);
            else if (key == "h_body") traj.meta.h_body = std::stod(val);
            else if (key == "dt") traj.meta.dt = std::stod(val);
            else if (key == "n_steps") traj.meta.n_steps = std::stoi(val);
            else if (key == "schema_version") traj.meta.schema_version = std::stoi(val);
            continue;
        }
        if (!header_seen) {
            if (line != csv_header) {
                throw error(errc::io, "unexpected CSV header in " + path);
            }
            header_seen = true;
            continue;
        }
        TrajectorySample s;
        double lc = 0.0, rc = 0.0;
        double* fields[10] = {&s.t,        &s.x_com,    &s.y_com,    &s.z_com,
                              &s.x_vcor_l, &s.y_vcor_l, &s.x_vcor_r, &s.y_vcor_r,
                              &lc,         &rc};
        std::stringstream ls(line);
        std::string tok;
        for (int i = 0; i < 10; ++i) {
            if (!std::getline(ls, tok, ',')) {
                throw error(errc::io, "short CSV row in " + path);
            }
            *fields[i] = std::strtod(tok.c_str(), nullptr);
        }
        s.left_contact = lc != 0.0;
        s.right_contact = rc != 0.0;
        traj.samples.push_back(s);
    }
    if (!header_seen) {
        throw error(errc::io, "missing CSV header in " + path);
    }
    return traj;
}

} // namespace gaitplan
