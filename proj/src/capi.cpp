#include "wpt/wpt.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <map>
#include <new>
#include <string>
#include <utility>

#include "calculus.hpp"
#include "errors.hpp"
#include "positioning.hpp"
#include "rectifier.hpp"
#include "scenario_io.hpp"
#include "waveforms.hpp"

struct wpt_model {
    wpt::HarvestModel impl;
};

struct wpt_report {
    wpt::ConvexityReport impl;
};

struct wpt_scenario {
    wpt::Scenario impl;
    wpt_model model;  // borrowed view handed out by wpt_scenario_model
};

struct wpt_trace {
    wpt::SiaTrace impl;
};

namespace {

thread_local std::string t_last_error;

void set_error(std::string msg) { t_last_error = std::move(msg); }

// Runs fn, translating the library's exception taxonomy into status codes.
template <class F>
wpt_status guarded(F&& fn) noexcept {
    try {
        fn();
        return WPT_OK;
    } catch (const wpt::ValidationError& e) {
        set_error(e.what());
        return WPT_ERR_INVALID_ARGUMENT;
    } catch (const wpt::ParseError& e) {
        set_error(e.what());
        return WPT_ERR_PARSE;
    } catch (const wpt::IoError& e) {
        set_error(e.what());
        return WPT_ERR_IO;
    } catch (const wpt::GridSizeError& e) {
        set_error(e.what());
        return WPT_ERR_GRID_TOO_LARGE;
    } catch (const wpt::SolverError& e) {
        set_error(e.what());
        return WPT_ERR_NO_CONVERGENCE;
    } catch (const wpt::DomainError& e) {
        set_error(e.what());
        return WPT_ERR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return WPT_ERR_INTERNAL;
    } catch (...) {
        set_error("unidentified failure");
        return WPT_ERR_INTERNAL;
    }
}

wpt_status fail_arg(const char* msg) {
    set_error(msg);
    return WPT_ERR_INVALID_ARGUMENT;
}

wpt::RectifierParams to_params(const wpt_diode_params& p) {
    wpt::RectifierParams out;
    out.i_s = p.i_s;
    out.n_ideality = p.n_ideality;
    out.v_t = p.v_t;
    out.r_ant = p.r_ant;
    out.r_load = p.r_load;
    out.trunc_order = p.trunc_order;
    return out;
}

wpt::Waveform builtin_by_name(const char* name, int max_order) {
    const std::string n = name ? name : "";
    if (n == "cw") return wpt::Waveform::builtin(wpt::WaveformKind::ContinuousWave, max_order);
    if (n == "gaussian") {
        return wpt::Waveform::builtin(wpt::WaveformKind::RealGaussian, max_order);
    }
    throw wpt::ValidationError("waveform must be \"cw\" or \"gaussian\", got \"" + n + "\"");
}

}  // namespace

extern "C" {

const char* wpt_last_error(void) { return t_last_error.c_str(); }

const char* wpt_status_name(wpt_status status) {
    switch (status) {
        case WPT_OK: return "ok";
        case WPT_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case WPT_ERR_PARSE: return "parse_error";
        case WPT_ERR_IO: return "io_error";
        case WPT_ERR_DOMAIN: return "domain_error";
        case WPT_ERR_NO_CONVERGENCE: return "no_convergence";
        case WPT_ERR_GRID_TOO_LARGE: return "grid_too_large";
        case WPT_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

void wpt_diode_params_defaults(wpt_diode_params* out) {
    if (!out) return;
    const wpt::RectifierParams d;
    *out = {d.i_s, d.n_ideality, d.v_t, d.r_ant, d.r_load, d.trunc_order};
}

wpt_status wpt_model_create(const wpt_diode_params* params, const char* waveform,
                            wpt_model** out) {
    if (!params || !waveform || !out) return fail_arg("wpt_model_create: null argument");
    return guarded([&] {
        const wpt::RectifierParams p = to_params(*params);
        p.validate();
        *out = new wpt_model{wpt::build_model(p, builtin_by_name(waveform, p.trunc_order))};
    });
}

wpt_status wpt_model_create_custom(const wpt_diode_params* params, const int* orders,
                                   const double* factors, size_t count, wpt_model** out) {
    if (!params || !out || (count > 0 && (!orders || !factors))) {
        return fail_arg("wpt_model_create_custom: null argument");
    }
    return guarded([&] {
        std::map<int, double> map;
        for (size_t k = 0; k < count; ++k) map[orders[k]] = factors[k];
        *out = new wpt_model{
            wpt::build_model(to_params(*params), wpt::Waveform::custom(map))};
    });
}

void wpt_model_free(wpt_model* model) { delete model; }

wpt_status wpt_rho(const wpt_model* model, double q_rf, double* out) {
    if (!model || !out) return fail_arg("wpt_rho: null argument");
    return guarded([&] { *out = wpt::rho(model->impl, q_rf); });
}

wpt_status wpt_solve_iout(const wpt_model* model, double q_rf, double* out) {
    if (!model || !out) return fail_arg("wpt_solve_iout: null argument");
    return guarded([&] { *out = wpt::solve_iout(model->impl, q_rf); });
}

wpt_status wpt_p_dc(const wpt_model* model, double q_rf, double* out) {
    if (!model || !out) return fail_arg("wpt_p_dc: null argument");
    return guarded([&] { *out = wpt::p_dc(model->impl, q_rf); });
}

wpt_status wpt_lambert_w0(double z, double* out) {
    if (!out) return fail_arg("wpt_lambert_w0: null argument");
    return guarded([&] { *out = wpt::lambert_w0(z); });
}

wpt_status wpt_diout_drho(const wpt_model* model, double q_rf, double* out) {
    if (!model || !out) return fail_arg("wpt_diout_drho: null argument");
    return guarded([&] { *out = wpt::diout_drho(model->impl, q_rf); });
}

wpt_status wpt_dpdc_dd(const wpt_model* model, double q0, double d, double* out) {
    if (!model || !out) return fail_arg("wpt_dpdc_dd: null argument");
    return guarded([&] { *out = wpt::dpdc_dd(model->impl, q0, d); });
}

wpt_status wpt_certify_convexity(const wpt_model* model, double curve_scale,
                                 const double* u_grid, size_t count, wpt_report** out) {
    if (!model || !u_grid || !out) return fail_arg("wpt_certify_convexity: null argument");
    return guarded([&] {
        const std::vector<double> grid(u_grid, u_grid + count);
        *out = new wpt_report{wpt::certify_convexity(
            model->impl, wpt::ParamCurve::reciprocal(curve_scale), grid)};
    });
}

void wpt_report_free(wpt_report* report) { delete report; }

size_t wpt_report_size(const wpt_report* report) {
    return report ? report->impl.rows.size() : 0;
}

wpt_status wpt_report_row(const wpt_report* report, size_t index, wpt_convexity_row* out) {
    if (!report || !out) return fail_arg("wpt_report_row: null argument");
    if (index >= report->impl.rows.size()) return fail_arg("wpt_report_row: index out of range");
    const wpt::ConvexityRow& r = report->impl.rows[index];
    *out = {r.u,          r.q_rf,           r.i_out,     r.p_dc,
            r.second_diff_pdc, r.second_diff_iout, r.cond_curv, r.cond_recip};
    return WPT_OK;
}

wpt_status wpt_report_summary(const wpt_report* report, wpt_convexity_summary* out) {
    if (!report || !out) return fail_arg("wpt_report_summary: null argument");
    const wpt::ConvexityReport& r = report->impl;
    wpt_convexity_status status = WPT_CONVEXITY_INCONCLUSIVE;
    if (r.status == wpt::ConvexityStatus::CertifiedConvex) status = WPT_CONVEXITY_CERTIFIED;
    if (r.status == wpt::ConvexityStatus::SecondDiffViolation) status = WPT_CONVEXITY_VIOLATION;
    *out = {r.second_diff_min_pdc,
            r.second_diff_min_iout,
            r.cond_curv_min,
            r.cond_recip_min,
            r.pdc_max_abs,
            r.verdict ? 1 : 0,
            r.cond_curv_holds ? 1 : 0,
            r.cond_recip_holds ? 1 : 0,
            status};
    return WPT_OK;
}

wpt_status wpt_scenario_load_file(const char* path, wpt_scenario** out) {
    if (!path || !out) return fail_arg("wpt_scenario_load_file: null argument");
    return guarded([&] {
        wpt::Scenario sc = wpt::load_scenario_file(path);
        wpt_model view{sc.model};
        *out = new wpt_scenario{std::move(sc), std::move(view)};
    });
}

wpt_status wpt_scenario_load_text(const char* json_text, wpt_scenario** out) {
    if (!json_text || !out) return fail_arg("wpt_scenario_load_text: null argument");
    return guarded([&] {
        wpt::Scenario sc = wpt::load_scenario_text(json_text);
        wpt_model view{sc.model};
        *out = new wpt_scenario{std::move(sc), std::move(view)};
    });
}

wpt_status wpt_scenario_generate(int n_receivers, double width, uint64_t seed,
                                 wpt_scenario** out) {
    if (!out) return fail_arg("wpt_scenario_generate: null argument");
    return guarded([&] {
        wpt::Scenario sc = wpt::generate_scenario(n_receivers, width, seed);
        wpt_model view{sc.model};
        *out = new wpt_scenario{std::move(sc), std::move(view)};
    });
}

void wpt_scenario_free(wpt_scenario* scenario) { delete scenario; }

wpt_status wpt_scenario_to_json(const wpt_scenario* scenario, char** out) {
    if (!scenario || !out) return fail_arg("wpt_scenario_to_json: null argument");
    return guarded([&] {
        const std::string text = wpt::save_scenario_text(scenario->impl);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

wpt_status wpt_scenario_save_file(const wpt_scenario* scenario, const char* path) {
    if (!scenario || !path) return fail_arg("wpt_scenario_save_file: null argument");
    return guarded([&] { wpt::save_scenario_file(scenario->impl, path); });
}

void wpt_string_free(char* text) { std::free(text); }

size_t wpt_scenario_receiver_count(const wpt_scenario* scenario) {
    return scenario ? scenario->impl.receivers.size() : 0;
}

wpt_status wpt_scenario_receiver(const wpt_scenario* scenario, size_t index, double* x,
                                 double* y) {
    if (!scenario || !x || !y) return fail_arg("wpt_scenario_receiver: null argument");
    if (index >= scenario->impl.receivers.size()) {
        return fail_arg("wpt_scenario_receiver: index out of range");
    }
    *x = scenario->impl.receivers[index].x;
    *y = scenario->impl.receivers[index].y;
    return WPT_OK;
}

wpt_status wpt_scenario_box(const wpt_scenario* scenario, double* x_min, double* x_max,
                            double* y_min, double* y_max) {
    if (!scenario || !x_min || !x_max || !y_min || !y_max) {
        return fail_arg("wpt_scenario_box: null argument");
    }
    const wpt::Box& b = scenario->impl.box;
    *x_min = b.x_min;
    *x_max = b.x_max;
    *y_min = b.y_min;
    *y_max = b.y_max;
    return WPT_OK;
}

wpt_status wpt_scenario_q0(const wpt_scenario* scenario, double* dbm, double* watts) {
    if (!scenario || !dbm || !watts) return fail_arg("wpt_scenario_q0: null argument");
    *dbm = scenario->impl.q0_dbm;
    *watts = scenario->impl.q0_w;
    return WPT_OK;
}

const wpt_model* wpt_scenario_model(const wpt_scenario* scenario) {
    return scenario ? &scenario->model : nullptr;
}

wpt_status wpt_min_harvest(const wpt_scenario* scenario, double x, double y, double* out) {
    if (!scenario || !out) return fail_arg("wpt_min_harvest: null argument");
    return guarded([&] { *out = wpt::min_harvest(scenario->impl, {x, y}); });
}

wpt_status wpt_sia_solve(const wpt_scenario* scenario, double init_x, double init_y,
                         int max_iters, double rel_tol, wpt_trace** out) {
    if (!scenario || !out) return fail_arg("wpt_sia_solve: null argument");
    return guarded([&] {
        *out = new wpt_trace{
            wpt::sia_solve(scenario->impl, {init_x, init_y}, max_iters, rel_tol)};
    });
}

void wpt_trace_free(wpt_trace* trace) { delete trace; }

size_t wpt_trace_size(const wpt_trace* trace) {
    return trace ? trace->impl.iterations.size() : 0;
}

wpt_status wpt_trace_entry(const wpt_trace* trace, size_t index, double* x, double* y,
                           double* certified_bound, double* objective, int* floor_clamped) {
    if (!trace || !x || !y || !certified_bound || !objective || !floor_clamped) {
        return fail_arg("wpt_trace_entry: null argument");
    }
    if (index >= trace->impl.iterations.size()) {
        return fail_arg("wpt_trace_entry: index out of range");
    }
    const wpt::SiaIteration& it = trace->impl.iterations[index];
    *x = it.position.x;
    *y = it.position.y;
    *certified_bound = it.surrogate_value;
    *objective = it.min_harvest;
    *floor_clamped = it.floor_clamped ? 1 : 0;
    return WPT_OK;
}

wpt_status wpt_trace_slopes(const wpt_trace* trace, size_t index, const double** slopes,
                            size_t* count) {
    if (!trace || !slopes || !count) return fail_arg("wpt_trace_slopes: null argument");
    if (index >= trace->impl.iterations.size()) {
        return fail_arg("wpt_trace_slopes: index out of range");
    }
    const std::vector<double>& a = trace->impl.iterations[index].alphas;
    *slopes = a.empty() ? nullptr : a.data();
    *count = a.size();
    return WPT_OK;
}

int wpt_trace_converged(const wpt_trace* trace) {
    return (trace && trace->impl.converged) ? 1 : 0;
}

wpt_stop_reason wpt_trace_stop_reason(const wpt_trace* trace) {
    if (!trace) return WPT_STOP_MAX_ITERS;
    return trace->impl.stop == wpt::SiaStop::ToleranceMet ? WPT_STOP_TOLERANCE
                                                          : WPT_STOP_MAX_ITERS;
}

wpt_status wpt_trace_final(const wpt_trace* trace, double* x, double* y, double* value) {
    if (!trace || !x || !y || !value) return fail_arg("wpt_trace_final: null argument");
    *x = trace->impl.position.x;
    *y = trace->impl.position.y;
    *value = trace->impl.value;
    return WPT_OK;
}

wpt_status wpt_exhaustive_search(const wpt_scenario* scenario, double resolution,
                                 int allow_large, wpt_grid_result* out) {
    if (!scenario || !out) return fail_arg("wpt_exhaustive_search: null argument");
    return guarded([&] {
        const wpt::GridResult r =
            wpt::exhaustive_search(scenario->impl, resolution, allow_large != 0);
        *out = {r.best.x, r.best.y, r.best_value, r.resolution, r.neighbor_rel_diff, r.cells};
    });
}

}  // extern "C"
