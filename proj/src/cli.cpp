#include "gaitplan/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaitplan/analysis.hpp"
#include "gaitplan/trajectory.hpp"

namespace gaitplan {

namespace {

using ConfigMap = std::map<std::string, std::string>;

ConfigMap load_env_config() {
    ConfigMap cfg;
    const char* path = std::getenv("GAITPLAN_CONFIG");
    if (path == nullptr || *path == '\0') {
        return cfg;
    }
    std::ifstream in(path);
    if (!in) {
        throw error(errc::io, std::string("GAITPLAN_CONFIG points to unreadable file ") + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) {
            cfg[key] = val;
        }
    }
    return cfg;
}

void apply(const ConfigMap& cfg, const char* key, std::string& target) {
    if (auto it = cfg.find(key); it != cfg.end()) {
        target = it->second;
    }
}
void apply(const ConfigMap& cfg, const char* key, double& target) {
    if (auto it = cfg.find(key); it != cfg.end()) {
        target = std::stod(it->second);
    }
}
void apply(const ConfigMap& cfg, const char* key, int& target) {
    if (auto it = cfg.find(key); it != cfg.end()) {
        target = std::stoi(it->second);
    }
}

InterpretationConfig parse_interp(const std::string& zmode, const std::string& zmaxmode,
                                  const std::string& dxank, const std::string& rangepolicy,
                                  const std::string& hsframe, const std::string& azformula) {
    InterpretationConfig ic;
    if (zmode == "continuous") ic.z_phase_mode = ZPhaseMode::continuous;
    else if (zmode == "as-written") ic.z_phase_mode = ZPhaseMode::as_written;
    else throw error(errc::invalid_input, "--z-mode must be continuous|as-written");

    if (zmaxmode == "squared") ic.zmax_mode = ZMaxMode::squared;
    else if (zmaxmode == "as-written") ic.zmax_mode = ZMaxMode::as_written;
    else throw error(errc::invalid_input, "--zmax-mode must be squared|as-written");

    if (dxank == "dxah") ic.d_x_ank_source = DxAnkSource::d_x_ah;
    else if (dxank == "dxa") ic.d_x_ank_source = DxAnkSource::d_x_a;
    else throw error(errc::invalid_input, "--dxank must be dxah|dxa");

    if (rangepolicy == "warn") ic.speed_range_policy = SpeedRangePolicy::warn;
    else if (rangepolicy == "reject") ic.speed_range_policy = SpeedRangePolicy::reject;
    else throw error(errc::invalid_input, "--range-policy must be warn|reject");

    if (hsframe == "heel-shifted") ic.hs_frame = HeelStrikeFrame::heel_shifted;
    else if (hsframe == "landing") ic.hs_frame = HeelStrikeFrame::landing;
    else if (hsframe == "support") ic.hs_frame = HeelStrikeFrame::support;
    else throw error(errc::invalid_input, "--hs-frame must be heel-shifted|landing|support");

    if (azformula == "step-arc") ic.az_formula = AzFormula::step_arc;
    else if (azformula == "as-written") ic.az_formula = AzFormula::as_written;
    else throw error(errc::invalid_input, "--az-formula must be step-arc|as-written");
    return ic;
}

struct SpeedRange {
    double v_min = 0.0, step = 0.0, v_max = 0.0;
};

SpeedRange parse_speeds(const std::string& arg) {
    SpeedRange r;
    char extra = 0;
    if (std::sscanf(arg.c_str(), "%lf:%lf:%lf%c", &r.v_min, &r.step, &r.v_max, &extra) != 3) {
        throw error(errc::invalid_input, "--speeds must be min:step:max, got '" + arg + "'");
    }
    return r;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_report(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = out + ".tmp";
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw error(errc::io, "cannot open " + tmp);
    }
    f << content;
    f.flush();
    if (!f || std::rename(tmp.c_str(), out.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw error(errc::io, "write failed for " + out);
    }
}

void check_speed_flag(double v) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << "--speed must be positive; the regression validity range is ["
           << speed_range_min << ", " << speed_range_max << "] m/s";
        throw error(errc::invalid_input, os.str());
    }
}

int run_fit(const std::string& input, int degree, const std::string& xcol,
            const std::string& ycol) {
    std::ifstream in(input);
    if (!in) {
        throw error(errc::io, "cannot open fit input " + input);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw error(errc::io, "fit input " + input + " is empty (header row required)");
    }
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            out.push_back(tok);
        }
        return out;
    };
    const std::vector<std::string> header = split(line);
    auto resolve = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        try {
            const size_t idx = static_cast<size_t>(std::stoul(name));
            if (idx < header.size()) {
                return idx;
            }
        } catch (...) {
        }
        throw error(errc::invalid_input, "column '" + name + "' not found in " + input);
    };
    const size_t xi = resolve(xcol);
    const size_t yi = resolve(ycol);

    std::vector<std::pair<double, double>> samples;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() <= std::max(xi, yi)) {
            throw error(errc::io, "short row in " + input);
        }
        auto num = [&](const std::string& cell) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || (end != nullptr && *end != '\0' && *end != '\r')) {
                throw error(errc::io, "non-numeric cell '" + cell + "' in " + input);
            }
            return v;
        };
        samples.emplace_back(num(cells[xi]), num(cells[yi]));
    }
    const PolyFit fit = fit_polynomial(samples, degree);
    std::ostringstream os;
    os << "degree=" << fit.degree << " coefficients=";
    for (size_t i = 0; i < fit.coefficients.size(); ++i) {
        os << (i > 0 ? "," : "") << fmt(fit.coefficients[i]);
    }
    os << " r_squared=" << fmt(fit.r_squared) << "\n";
    std::cout << os.str();
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Deterministic task-space gait planner for straight constant-speed walking"};
    app.require_subcommand(1);

    ConfigMap file_cfg;
    try {
        file_cfg = load_env_config();
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // Defaults, overridden by the config file, overridden by flags.
    double speed = 1.2, height = 1.71, dt = 0.005;
    int steps = 4;
    std::string format = "csv", out, zmode = "continuous", zmaxmode = "squared";
    std::string dxank = "dxah", rangepolicy = "warn", hsframe = "heel-shifted";
    std::string azformula = "step-arc";
    std::string speeds = "0.6:0.2:2.2";
    std::string fit_input, xcol = "0", ycol = "1";
    int degree = 1;
    try {
        apply(file_cfg, "speed", speed);
        apply(file_cfg, "height", height);
        apply(file_cfg, "steps", steps);
        apply(file_cfg, "dt", dt);
        apply(file_cfg, "format", format);
        apply(file_cfg, "out", out);
        apply(file_cfg, "zmode", zmode);
        apply(file_cfg, "zmaxmode", zmaxmode);
        apply(file_cfg, "dxank", dxank);
        apply(file_cfg, "rangepolicy", rangepolicy);
        apply(file_cfg, "hsframe", hsframe);
        apply(file_cfg, "azformula", azformula);
        apply(file_cfg, "speeds", speeds);
        apply(file_cfg, "input", fit_input);
        apply(file_cfg, "degree", degree);
        apply(file_cfg, "xcol", xcol);
        apply(file_cfg, "ycol", ycol);
    } catch (const std::exception& e) {
        std::cerr << "error: bad config value: " << e.what() << "\n";
        return 1;
    }

    auto* plan = app.add_subcommand("plan", "Plan one gait trajectory and export it");
    plan->add_option("--speed", speed, "walking speed [m/s]")->capture_default_str();
    plan->add_option("--height", height, "body height [m]")->capture_default_str();
    plan->add_option("--steps", steps, "number of steps")->capture_default_str();
    plan->add_option("--dt", dt, "sample interval [s]")->capture_default_str();
    plan->add_option("--format", format, "csv|json")->capture_default_str();
    plan->add_option("--out", out, "output path")->capture_default_str();
    plan->add_option("--z-mode", zmode, "continuous|as-written")->capture_default_str();
    plan->add_option("--zmax-mode", zmaxmode, "squared|as-written")->capture_default_str();
    plan->add_option("--dxank", dxank, "dxah|dxa")->capture_default_str();
    plan->add_option("--range-policy", rangepolicy, "warn|reject")->capture_default_str();
    plan->add_option("--hs-frame", hsframe, "heel-shifted|landing|support")
        ->capture_default_str();
    plan->add_option("--az-formula", azformula, "step-arc|as-written")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Double-support/contact table over a speed range");
    sweep->add_option("--speeds", speeds, "min:step:max [m/s]")->capture_default_str();
    sweep->add_option("--height", height, "body height [m]")->capture_default_str();
    sweep->add_option("--out", out, "output path (stdout when omitted)")->capture_default_str();
    sweep->add_option("--hs-frame", hsframe, "heel-shifted|landing|support")
        ->capture_default_str();
    sweep->add_option("--dxank", dxank, "dxah|dxa")->capture_default_str();
    sweep->add_option("--az-formula", azformula, "step-arc|as-written")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Model-vs-regression amplitude comparison");
    validate->add_option("--speeds", speeds, "min:step:max [m/s]")->capture_default_str();
    validate->add_option("--height", height, "body height [m]")->capture_default_str();
    validate->add_option("--out", out, "output path (stdout when omitted)")
        ->capture_default_str();
    validate->add_option("--hs-frame", hsframe, "heel-shifted|landing|support")
        ->capture_default_str();
    validate->add_option("--az-formula", azformula, "step-arc|as-written")
        ->capture_default_str();

    auto* fit = app.add_subcommand("fit", "Polynomial least-squares fit of CSV columns");
    fit->add_option("--input", fit_input, "input CSV (header row required)")
        ->capture_default_str();
    fit->add_option("--degree", degree, "1 or 2")->capture_default_str();
    fit->add_option("--xcol", xcol, "x column name or index")->capture_default_str();
    fit->add_option("--ycol", ycol, "y column name or index")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const InterpretationConfig interp =
            parse_interp(zmode, zmaxmode, dxank, rangepolicy, hsframe, azformula);

        if (plan->parsed()) {
            check_speed_flag(speed);
            if (out.empty()) {
                throw error(errc::invalid_input, "plan requires --out");
            }
            RunConfig rc;
            rc.v_w = speed;
            rc.h_body = height;
            rc.n_steps = steps;
            rc.dt = dt;
            rc.interp = interp;
            const GaitTrajectory traj = plan_gait(rc);
            if (format == "csv") {
                export_csv(traj, out);
            } else if (format == "json") {
                export_json(traj, out);
            } else {
                throw error(errc::invalid_input, "--format must be csv|json");
            }
            return 0;
        }
        if (sweep->parsed()) {
            const SpeedRange r = parse_speeds(speeds);
            const auto rows = speed_sweep(r.v_min, r.v_max, r.step, height, interp);
            std::ostringstream os;
            os << "v_w,ds_pct_gc,contact_pct_gc,a_y,a_z\n";
            for (const auto& m : rows) {
                os << fmt(m.v_w) << ',' << fmt(m.ds_pct_gc) << ',' << fmt(m.contact_pct_gc)
                   << ',' << fmt(m.a_y_measured) << ',' << fmt(m.a_z_measured) << "\n";
            }
            write_report(out, os.str());
            return 0;
        }
        if (validate->parsed()) {
            const SpeedRange r = parse_speeds(speeds);
            const auto rows = speed_sweep(r.v_min, r.v_max, r.step, height, interp);
            std::ostringstream os;
            os << "v_w,a_y_model,a_y_des,a_y_abs_err,a_z_model,a_z_des,a_z_abs_err\n";
            for (const auto& m : rows) {
                const auto [ayd, azd] = desired_amplitudes(m.v_w);
                os << fmt(m.v_w) << ',' << fmt(m.a_y_measured) << ',' << fmt(ayd) << ','
                   << fmt(std::fabs(m.a_y_measured - ayd)) << ',' << fmt(m.a_z_measured)
                   << ',' << fmt(azd) << ',' << fmt(std::fabs(m.a_z_measured - azd)) << "\n";
            }
            write_report(out, os.str());
            return 0;
        }
        if (fit->parsed()) {
            if (fit_input.empty()) {
                throw error(errc::invalid_input, "fit requires --input");
            }
            return run_fit(fit_input, degree, xcol, ycol);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == errc::invalid_input || e.code() == errc::range) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace gaitplan
