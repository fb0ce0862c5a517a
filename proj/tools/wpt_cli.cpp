// Command-line surface over the wpt shared library: model curves, convexity
// certification, transmitter positioning, exhaustive baselines, and scenario
// generation.  Outputs are deterministic for identical inputs: CSV for
// curves, JSON (fixed key order, fixed formatting) for traces and reports.

#include <wpt/wpt.h>

#include <cstdio>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(wpt_status status) {
    switch (status) {
        case WPT_OK: return 0;
        case WPT_ERR_INVALID_ARGUMENT:
        case WPT_ERR_PARSE:
        case WPT_ERR_IO:
        case WPT_ERR_DOMAIN: return 2;
        case WPT_ERR_NO_CONVERGENCE: return 3;
        case WPT_ERR_GRID_TOO_LARGE: return 4;
        case WPT_ERR_INTERNAL: return 1;
    }
    return 1;
}

// Machine-readable failure record on stderr; returns the exit code.
int fail(wpt_status status, const std::string& message) {
    const int code = exit_code_for(status);
    json err = {{"error",
                 {{"status", wpt_status_name(status)},
                  {"message", message},
                  {"exit_code", code}}}};
    std::cerr << err.dump() << "\n";
    return code;
}

int fail_last(wpt_status status) { return fail(status, wpt_last_error()); }

int fail_usage(const std::string& message) { return fail(WPT_ERR_INVALID_ARGUMENT, message); }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool write_output(const std::string& path, const std::string& content, std::string* err) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        *err = "cannot open '" + path + "' for writing";
        return false;
    }
    out << content;
    if (!out.flush()) {
        *err = "failed writing '" + path + "'";
        return false;
    }
    return true;
}

// RAII holders for the C handles.
struct ModelPtr {
    wpt_model* p = nullptr;
    ~ModelPtr() { wpt_model_free(p); }
};
struct ScenarioPtr {
    wpt_scenario* p = nullptr;
    ~ScenarioPtr() { wpt_scenario_free(p); }
};
struct TracePtr {
    wpt_trace* p = nullptr;
    ~TracePtr() { wpt_trace_free(p); }
};
struct ReportPtr {
    wpt_report* p = nullptr;
    ~ReportPtr() { wpt_report_free(p); }
};

json scenario_json(const wpt_scenario* sc) {
    char* text = nullptr;
    if (wpt_scenario_to_json(sc, &text) != WPT_OK) return json();
    json parsed = json::parse(text);
    wpt_string_free(text);
    return parsed;
}

// Optional per-field diode/waveform overrides shared by curve-style commands.
struct ModelFlags {
    std::optional<double> i_s, n_ideality, v_t, r_ant, r_load;
    std::optional<int> trunc_order;
    std::optional<std::string> waveform;

    void attach(CLI::App* cmd) {
        cmd->add_option("--i-s", i_s, "diode saturation current override [A]");
        cmd->add_option("--n", n_ideality, "diode ideality factor override");
        cmd->add_option("--v-t", v_t, "thermal voltage override [V]");
        cmd->add_option("--r-ant", r_ant, "antenna resistance override [ohm]");
        cmd->add_option("--r-load", r_load, "load resistance override [ohm]");
        cmd->add_option("--trunc-order", trunc_order, "expansion truncation order override");
        cmd->add_option("--waveform", waveform, "waveform override: cw or gaussian");
    }
};

// Builds the model for curve/check-convexity: scenario file (if given) as the
// base, flag overrides on top.  On success fills config_out with the resolved
// diode + waveform description.
wpt_status make_model(const std::string& scenario_path, const ModelFlags& flags,
                      ModelPtr& model, json* config_out, std::string* err) {
    wpt_diode_params params;
    wpt_diode_params_defaults(&params);
    json waveform_cfg = "cw";

    if (!scenario_path.empty()) {
        ScenarioPtr sc;
        const wpt_status st = wpt_scenario_load_file(scenario_path.c_str(), &sc.p);
        if (st != WPT_OK) {
            *err = wpt_last_error();
            return st;
        }
        const json full = scenario_json(sc.p);
        const json& d = full["diode"];
        params.i_s = d["i_s"].get<double>();
        params.n_ideality = d["n"].get<double>();
        params.v_t = d["v_t"].get<double>();
        params.r_ant = d["r_ant"].get<double>();
        params.r_load = d["r_load"].get<double>();
        params.trunc_order = d["trunc_order"].get<int>();
        waveform_cfg = full["waveform"];
    }

    if (flags.i_s) params.i_s = *flags.i_s;
    if (flags.n_ideality) params.n_ideality = *flags.n_ideality;
    if (flags.v_t) params.v_t = *flags.v_t;
    if (flags.r_ant) params.r_ant = *flags.r_ant;
    if (flags.r_load) params.r_load = *flags.r_load;
    if (flags.trunc_order) params.trunc_order = *flags.trunc_order;
    if (flags.waveform) waveform_cfg = *flags.waveform;

    wpt_status st;
    if (waveform_cfg.is_string()) {
        st = wpt_model_create(&params, waveform_cfg.get<std::string>().c_str(), &model.p);
    } else {
        std::vector<int> orders;
        std::vector<double> factors;
        for (const auto& [key, value] : waveform_cfg.items()) {
            orders.push_back(std::stoi(key));
            factors.push_back(value.get<double>());
        }
        st = wpt_model_create_custom(&params, orders.data(), factors.data(), orders.size(),
                                     &model.p);
    }
    if (st != WPT_OK) {
        *err = wpt_last_error();
        return st;
    }
    if (config_out) {
        *config_out = {{"diode",
                        {{"i_s", params.i_s},
                         {"n", params.n_ideality},
                         {"v_t", params.v_t},
                         {"r_ant", params.r_ant},
                         {"r_load", params.r_load},
                         {"trunc_order", params.trunc_order}}},
                       {"waveform", waveform_cfg}};
    }
    return WPT_OK;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double ratio = hi / lo;
    for (int k = 0; k < points; ++k) {
        grid[static_cast<std::size_t>(k)] =
            lo * std::pow(ratio, static_cast<double>(k) / static_cast<double>(points - 1));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

// Initial-point spec: "x,y", "centroid", or "near-receiver:<n>".
wpt_status resolve_init(const wpt_scenario* sc, const std::string& spec, double* x, double* y,
                        std::string* err) {
    double bx0, bx1, by0, by1;
    wpt_scenario_box(sc, &bx0, &bx1, &by0, &by1);
    if (spec == "centroid") {
        const std::size_t n = wpt_scenario_receiver_count(sc);
        double sx = 0.0, sy = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double rx, ry;
            wpt_scenario_receiver(sc, k, &rx, &ry);
            sx += rx;
            sy += ry;
        }
        *x = sx / static_cast<double>(n);
        *y = sy / static_cast<double>(n);
        return WPT_OK;
    }
    if (spec.rfind("near-receiver:", 0) == 0) {
        std::size_t idx = 0;
        try {
            idx = static_cast<std::size_t>(std::stoul(spec.substr(14)));
        } catch (const std::exception&) {
            *err = "init: bad receiver index in '" + spec + "'";
            return WPT_ERR_INVALID_ARGUMENT;
        }
        double rx, ry;
        if (wpt_scenario_receiver(sc, idx, &rx, &ry) != WPT_OK) {
            *err = wpt_last_error();
            return WPT_ERR_INVALID_ARGUMENT;
        }
        // A deliberately bad start: a millimeter off the receiver, kept in box.
        *x = std::min(std::max(rx + 1e-3, bx0), bx1);
        *y = std::min(std::max(ry + 1e-3, by0), by1);
        return WPT_OK;
    }
    const std::size_t comma = spec.find(',');
    if (comma == std::string::npos) {
        *err = "init: expected \"x,y\", \"centroid\", or \"near-receiver:<n>\", got '" + spec +
               "'";
        return WPT_ERR_INVALID_ARGUMENT;
    }
    try {
        std::size_t used = 0;
        const std::string xs = spec.substr(0, comma), ys = spec.substr(comma + 1);
        *x = std::stod(xs, &used);
        if (used != xs.size()) throw std::invalid_argument(xs);
        *y = std::stod(ys, &used);
        if (used != ys.size()) throw std::invalid_argument(ys);
    } catch (const std::exception&) {
        *err = "init: cannot parse coordinates from '" + spec + "'";
        return WPT_ERR_INVALID_ARGUMENT;
    }
    if (*x < bx0 || *x > bx1 || *y < by0 || *y > by1) {
        *err = "init: point (" + fmt_double(*x) + ", " + fmt_double(*y) +
               ") lies outside the scenario box";
        return WPT_ERR_INVALID_ARGUMENT;
    }
    return WPT_OK;
}

json trace_json(const wpt_trace* trace) {
    json iters = json::array();
    const std::size_t n = wpt_trace_size(trace);
    for (std::size_t k = 0; k < n; ++k) {
        double x, y, bound, objective;
        int clamped;
        wpt_trace_entry(trace, k, &x, &y, &bound, &objective, &clamped);
        const double* slopes = nullptr;
        std::size_t n_slopes = 0;
        wpt_trace_slopes(trace, k, &slopes, &n_slopes);
        json jslopes = json::array();
        for (std::size_t s = 0; s < n_slopes; ++s) jslopes.push_back(slopes[s]);
        iters.push_back({{"iter", k},
                         {"x", x},
                         {"y", y},
                         {"certified_bound_w", bound},
                         {"min_harvest_w", objective},
                         {"floor_clamped", clamped != 0},
                         {"slopes", std::move(jslopes)}});
    }
    double fx, fy, fv;
    wpt_trace_final(trace, &fx, &fy, &fv);
    return {{"iterations", std::move(iters)},
            {"converged", wpt_trace_converged(trace) != 0},
            {"stop", wpt_trace_stop_reason(trace) == WPT_STOP_TOLERANCE ? "tolerance"
                                                                        : "max_iters"},
            {"final", {{"x", fx}, {"y", fy}, {"certified_bound_w", fv}}}};
}

int emit_json(const json& doc, const std::string& out_path) {
    std::string err;
    if (!write_output(out_path, doc.dump(2) + "\n", &err)) return fail(WPT_ERR_IO, err);
    return 0;
}

// ---------------------------------------------------------------- curve ---

int run_curve(const std::string& scenario_path, const ModelFlags& flags, double q_min,
              double q_max, int points, const std::string& out_path, bool convexity) {
    if (!(q_min > 0.0) || !(q_max > q_min) || !std::isfinite(q_max)) {
        return fail_usage("curve: need 0 < q-min < q-max, both finite");
    }
    if (points < 2 || points > 1000000) {
        return fail_usage("curve: points must lie in [2, 1000000]");
    }
    ModelPtr model;
    json config;
    std::string err;
    wpt_status st = make_model(scenario_path, flags, model, &config, &err);
    if (st != WPT_OK) return fail(st, err);

    std::string csv;
    if (!convexity) {
        csv = "q_rf_w,u_inv_w,i_out_a,p_dc_w\n";
        for (double q : log_grid(q_min, q_max, points)) {
            double i = 0.0, p = 0.0;
            if ((st = wpt_solve_iout(model.p, q, &i)) != WPT_OK) return fail_last(st);
            if ((st = wpt_p_dc(model.p, q, &p)) != WPT_OK) return fail_last(st);
            csv += fmt_double(q) + "," + fmt_double(1.0 / q) + "," + fmt_double(i) + "," +
                   fmt_double(p) + "\n";
        }
    } else {
        // Probe convexity versus u = 1/q_rf: ascending u grid mirrors the
        // descending q grid.
        const std::vector<double> qs = log_grid(q_min, q_max, points);
        std::vector<double> us(qs.size());
        for (std::size_t k = 0; k < qs.size(); ++k) us[k] = 1.0 / qs[qs.size() - 1 - k];
        ReportPtr report;
        if ((st = wpt_certify_convexity(model.p, 1.0, us.data(), us.size(), &report.p)) !=
            WPT_OK) {
            return fail_last(st);
        }
        csv =
            "q_rf_w,u_inv_w,i_out_a,p_dc_w,second_diff_pdc_w_u2,cond_curvature_a_u2,"
            "cond_reciprocal_w4\n";
        const std::size_t rows = wpt_report_size(report.p);
        for (std::size_t k = 0; k < rows; ++k) {
            wpt_convexity_row row;
            wpt_report_row(report.p, k, &row);
            csv += fmt_double(row.q_rf) + "," + fmt_double(row.u) + "," +
                   fmt_double(row.i_out) + "," + fmt_double(row.p_dc) + "," +
                   fmt_double(row.second_diff_pdc) + "," + fmt_double(row.cond_curvature) +
                   "," + fmt_double(row.cond_reciprocal) + "\n";
        }
        wpt_convexity_summary sum;
        wpt_report_summary(report.p, &sum);
        const char* status = sum.status == WPT_CONVEXITY_CERTIFIED      ? "certified_convex"
                             : sum.status == WPT_CONVEXITY_INCONCLUSIVE ? "condition_failed"
                                                                        : "second_diff_violation";
        json summary = {{"command", "check-convexity"},
                        {"config",
                         {{"model", config},
                          {"q_min_w", q_min},
                          {"q_max_w", q_max},
                          {"points", points},
                          {"out", out_path.empty() ? "-" : out_path}}},
                        {"summary",
                         {{"status", status},
                          {"verdict_convex", sum.verdict != 0},
                          {"second_diff_min_pdc", sum.second_diff_min_pdc},
                          {"second_diff_min_iout", sum.second_diff_min_iout},
                          {"cond_curvature_min", sum.cond_curvature_min},
                          {"cond_curvature_holds", sum.cond_curvature_holds != 0},
                          {"cond_reciprocal_min", sum.cond_reciprocal_min},
                          {"cond_reciprocal_holds", sum.cond_reciprocal_holds != 0},
                          {"pdc_max_abs_w", sum.pdc_max_abs}}}};
        std::cerr << summary.dump() << "\n";
    }
    std::string werr;
    if (!write_output(out_path, csv, &werr)) return fail(WPT_ERR_IO, werr);
    return 0;
}

// ------------------------------------------------------------- position ---

int run_position(const std::string& scenario_path, const std::string& init_spec,
                 int max_iters, double rel_tol, const std::string& out_path) {
    ScenarioPtr sc;
    wpt_status st = wpt_scenario_load_file(scenario_path.c_str(), &sc.p);
    if (st != WPT_OK) return fail_last(st);

    double ix = 0.0, iy = 0.0;
    std::string err;
    if ((st = resolve_init(sc.p, init_spec, &ix, &iy, &err)) != WPT_OK) return fail(st, err);

    TracePtr trace;
    if ((st = wpt_sia_solve(sc.p, ix, iy, max_iters, rel_tol, &trace.p)) != WPT_OK) {
        return fail_last(st);
    }

    json doc = {{"command", "position"},
                {"config",
                 {{"scenario", scenario_json(sc.p)},
                  {"init", {{"spec", init_spec}, {"x", ix}, {"y", iy}}},
                  {"max_iters", max_iters},
                  {"rel_tol", rel_tol}}},
                {"trace", trace_json(trace.p)}};
    const int rc = emit_json(doc, out_path);
    if (rc != 0) return rc;
    if (!wpt_trace_converged(trace.p)) {
        return fail(WPT_ERR_NO_CONVERGENCE,
                    "position: stopped at max_iters before reaching rel_tol");
    }
    return 0;
}

// ---------------------------------------------------------------- brute ---

int run_brute(const std::string& scenario_path, double resolution, bool grid_override,
              const std::string& out_path) {
    ScenarioPtr sc;
    wpt_status st = wpt_scenario_load_file(scenario_path.c_str(), &sc.p);
    if (st != WPT_OK) return fail_last(st);

    wpt_grid_result grid;
    if ((st = wpt_exhaustive_search(sc.p, resolution, grid_override ? 1 : 0, &grid)) !=
        WPT_OK) {
        return fail_last(st);
    }
    json doc = {{"command", "brute"},
                {"config",
                 {{"scenario", scenario_json(sc.p)},
                  {"resolution_m", resolution},
                  {"grid_override", grid_override}}},
                {"result",
                 {{"best_x", grid.best_x},
                  {"best_y", grid.best_y},
                  {"best_value_w", grid.best_value},
                  {"cells", grid.cells},
                  {"neighbor_rel_diff", grid.neighbor_rel_diff}}}};
    return emit_json(doc, out_path);
}

// -------------------------------------------------------------- compare ---

int run_compare(const std::string& scenario_path, double resolution, bool grid_override,
                int max_iters, double rel_tol, const std::string& out_path) {
    ScenarioPtr sc;
    wpt_status st = wpt_scenario_load_file(scenario_path.c_str(), &sc.p);
    if (st != WPT_OK) return fail_last(st);

    struct Run {
        const char* label;
        const char* spec;
        TracePtr trace;
        double x = 0.0, y = 0.0;
    } runs[2] = {{"ini_good", "centroid", {}, 0.0, 0.0},
                 {"ini_bad", "near-receiver:0", {}, 0.0, 0.0}};

    json jruns = json::object();
    for (Run& run : runs) {
        double ix = 0.0, iy = 0.0;
        std::string err;
        if ((st = resolve_init(sc.p, run.spec, &ix, &iy, &err)) != WPT_OK) {
            return fail(st, err);
        }
        if ((st = wpt_sia_solve(sc.p, ix, iy, max_iters, rel_tol, &run.trace.p)) != WPT_OK) {
            return fail_last(st);
        }
        double fv;
        wpt_trace_final(run.trace.p, &run.x, &run.y, &fv);
        json entry = trace_json(run.trace.p);
        entry["init"] = {{"spec", run.spec}, {"x", ix}, {"y", iy}};
        jruns[run.label] = std::move(entry);
    }

    wpt_grid_result grid;
    if ((st = wpt_exhaustive_search(sc.p, resolution, grid_override ? 1 : 0, &grid)) !=
        WPT_OK) {
        return fail_last(st);
    }

    double gx, gy, good_value, bx, by, bad_value;
    wpt_trace_final(runs[0].trace.p, &gx, &gy, &good_value);
    wpt_trace_final(runs[1].trace.p, &bx, &by, &bad_value);
    const double gap = std::hypot(gx - bx, gy - by);
    const double best_sia = std::max(good_value, bad_value);

    json doc = {
        {"command", "compare"},
        {"config",
         {{"scenario", scenario_json(sc.p)},
          {"resolution_m", resolution},
          {"grid_override", grid_override},
          {"max_iters", max_iters},
          {"rel_tol", rel_tol}}},
        {"runs", std::move(jruns)},
        {"brute",
         {{"best_x", grid.best_x},
          {"best_y", grid.best_y},
          {"best_value_w", grid.best_value},
          {"cells", grid.cells},
          {"neighbor_rel_diff", grid.neighbor_rel_diff}}},
        {"agreement",
         {{"init_position_gap_m", gap},
          {"init_same_point_within_1e-4_m", gap <= 1e-4},
          {"sia_vs_brute_rel",
           std::abs(best_sia - grid.best_value) / std::max(grid.best_value, 1e-300)}}}};
    const int rc = emit_json(doc, out_path);
    if (rc != 0) return rc;
    if (!wpt_trace_converged(runs[0].trace.p) || !wpt_trace_converged(runs[1].trace.p)) {
        return fail(WPT_ERR_NO_CONVERGENCE,
                    "compare: a run stopped at max_iters before reaching rel_tol");
    }
    return 0;
}

// --------------------------------------------------------- gen-scenario ---

int run_gen_scenario(int receivers, double width, std::uint64_t seed,
                     const std::string& out_path) {
    ScenarioPtr sc;
    const wpt_status st =
        wpt_scenario_generate(receivers, width, seed, &sc.p);
    if (st != WPT_OK) return fail_last(st);
    char* text = nullptr;
    if (wpt_scenario_to_json(sc.p, &text) != WPT_OK) return fail_last(WPT_ERR_INTERNAL);
    std::string content(text);
    wpt_string_free(text);
    std::string err;
    if (!write_output(out_path, content, &err)) return fail(WPT_ERR_IO, err);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear RF energy-harvesting model and max-min transmitter positioning"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, init_spec = "centroid";
    double q_min = 1e-6, q_max = 1.0, resolution = 0.01, rel_tol = 1e-6, width = 5.0;
    int points = 200, max_iters = 50, receivers = 5;
    std::uint64_t seed = 1;
    bool grid_override = false;
    ModelFlags curve_flags, conv_flags;

    CLI::App* c_curve = app.add_subcommand(
        "curve", "DC current and power over a log-spaced grid of input power (CSV)");
    c_curve->add_option("--scenario", scenario_path, "scenario file supplying the model");
    c_curve->add_option("--out", out_path, "output path (default: stdout)");
    c_curve->add_option("--q-min", q_min, "lowest input power [W]");
    c_curve->add_option("--q-max", q_max, "highest input power [W]");
    c_curve->add_option("--points", points, "grid size");
    curve_flags.attach(c_curve);

    CLI::App* c_conv = app.add_subcommand(
        "check-convexity",
        "curve plus measured second differences and analytic curvature conditions (CSV)");
    c_conv->add_option("--scenario", scenario_path, "scenario file supplying the model");
    c_conv->add_option("--out", out_path, "output path (default: stdout)");
    c_conv->add_option("--q-min", q_min, "lowest input power [W]");
    c_conv->add_option("--q-max", q_max, "highest input power [W]");
    c_conv->add_option("--points", points, "grid size");
    conv_flags.attach(c_conv);

    CLI::App* c_pos = app.add_subcommand(
        "position", "max-min transmitter placement by successive inner approximation (JSON)");
    c_pos->add_option("--scenario", scenario_path, "scenario file")->required();
    c_pos->add_option("--out", out_path, "output path (default: stdout)");
    c_pos->add_option("--init", init_spec, "x,y | centroid | near-receiver:<n>");
    c_pos->add_option("--tol", rel_tol, "relative stall tolerance");
    c_pos->add_option("--max-iters", max_iters, "iteration budget");

    CLI::App* c_brute = app.add_subcommand(
        "brute", "exhaustive grid baseline for the placement objective (JSON)");
    c_brute->add_option("--scenario", scenario_path, "scenario file")->required();
    c_brute->add_option("--out", out_path, "output path (default: stdout)");
    c_brute->add_option("--resolution", resolution, "grid spacing [m]");
    c_brute->add_flag("--grid-override", grid_override, "allow grids beyond the cell cap");

    CLI::App* c_cmp = app.add_subcommand(
        "compare", "SIA from centroid and near-receiver starts plus the grid baseline (JSON)");
    c_cmp->add_option("--scenario", scenario_path, "scenario file")->required();
    c_cmp->add_option("--out", out_path, "output path (default: stdout)");
    c_cmp->add_option("--resolution", resolution, "grid spacing [m]");
    c_cmp->add_flag("--grid-override", grid_override, "allow grids beyond the cell cap");
    c_cmp->add_option("--tol", rel_tol, "relative stall tolerance");
    c_cmp->add_option("--max-iters", max_iters, "iteration budget");

    CLI::App* c_gen = app.add_subcommand(
        "gen-scenario", "deterministic random scenario from a seed (JSON)");
    c_gen->add_option("--receivers", receivers, "number of receivers");
    c_gen->add_option("--width", width, "square side length [m]");
    c_gen->add_option("--seed", seed, "RNG seed");
    c_gen->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_usage(std::string("argument error: ") + e.what());
    }

    if (*c_curve) return run_curve(scenario_path, curve_flags, q_min, q_max, points, out_path,
                                   /*convexity=*/false);
    if (*c_conv) return run_curve(scenario_path, conv_flags, q_min, q_max, points, out_path,
                                  /*convexity=*/true);
    if (*c_pos) return run_position(scenario_path, init_spec, max_iters, rel_tol, out_path);
    if (*c_brute) return run_brute(scenario_path, resolution, grid_override, out_path);
    if (*c_cmp) return run_compare(scenario_path, resolution, grid_override, max_iters,
                                   rel_tol, out_path);
    if (*c_gen) return run_gen_scenario(receivers, width, seed, out_path);
    return fail_usage("no command given");
}
