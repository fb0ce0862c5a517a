/*
 * wpt: truncated nonlinear RF energy-harvesting model, convexity
 * certification, and max-min transmitter positioning.
 *
 * C interface over the C++ core.  All functions returning wpt_status set a
 * thread-local error message retrievable via wpt_last_error() on failure.
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function.  Out-parameters are written
 * only on WPT_OK.
 */
#ifndef WPT_WPT_H
#define WPT_WPT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WPT_API __declspec(dllexport)
#else
#define WPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpt_status {
    WPT_OK = 0,
    WPT_ERR_INVALID_ARGUMENT = 1, /* bad configuration or null pointer */
    WPT_ERR_PARSE = 2,            /* malformed scenario/config text */
    WPT_ERR_IO = 3,               /* filesystem failure */
    WPT_ERR_DOMAIN = 4,           /* numeric argument outside the domain */
    WPT_ERR_NO_CONVERGENCE = 5,   /* iterative solver exhausted its budget */
    WPT_ERR_GRID_TOO_LARGE = 6,   /* grid sweep refused without override */
    WPT_ERR_INTERNAL = 7          /* unexpected failure (allocation, ...) */
} wpt_status;

/* Message describing the most recent failure on this thread ("" if none). */
WPT_API const char* wpt_last_error(void);

/* Stable identifier for a status code, e.g. "invalid_argument". */
WPT_API const char* wpt_status_name(wpt_status status);

/* ------------------------------------------------------------------ */
/* Harvest model                                                       */
/* ------------------------------------------------------------------ */

typedef struct wpt_model wpt_model;

typedef struct wpt_diode_params {
    double i_s;        /* reverse saturation current [A] */
    double n_ideality; /* diode ideality factor */
    double v_t;        /* thermal voltage [V] */
    double r_ant;      /* antenna resistance [ohm] */
    double r_load;     /* DC load resistance [ohm] */
    int trunc_order;   /* expansion truncation order (even, >= 2) */
} wpt_diode_params;

/* Fills the library defaults: 5e-6 A, 1.05, 0.02586 V, 50, 5000, order 4. */
WPT_API void wpt_diode_params_defaults(wpt_diode_params* out);

/* waveform is "cw" (constant envelope) or "gaussian" (real zero-mean). */
WPT_API wpt_status wpt_model_create(const wpt_diode_params* params, const char* waveform,
                                    wpt_model** out);

/* Custom even-moment factors: orders[k] >= 4 even, factors[k] > 0.  The
 * order-2 factor is 1 implicitly.  Factors must cover every even order up
 * to trunc_order. */
WPT_API wpt_status wpt_model_create_custom(const wpt_diode_params* params, const int* orders,
                                           const double* factors, size_t count,
                                           wpt_model** out);

WPT_API void wpt_model_free(wpt_model* model);

/* Polynomial harvest map rho(q_rf) and the DC operating point it induces. */
WPT_API wpt_status wpt_rho(const wpt_model* model, double q_rf, double* out);
WPT_API wpt_status wpt_solve_iout(const wpt_model* model, double q_rf, double* out);
WPT_API wpt_status wpt_p_dc(const wpt_model* model, double q_rf, double* out);

/* Principal Lambert W branch for z >= 0. */
WPT_API wpt_status wpt_lambert_w0(double z, double* out);

/* Sensitivity of the DC current to rho, at operating point q_rf. */
WPT_API wpt_status wpt_diout_drho(const wpt_model* model, double q_rf, double* out);

/* d p_dc / d d with rectifier input q0 / d (pathloss d > 0). */
WPT_API wpt_status wpt_dpdc_dd(const wpt_model* model, double q0, double d, double* out);

/* ------------------------------------------------------------------ */
/* Convexity certification                                             */
/* ------------------------------------------------------------------ */

typedef struct wpt_report wpt_report;

typedef enum wpt_convexity_status {
    WPT_CONVEXITY_CERTIFIED = 0,      /* curvature certificate holds */
    WPT_CONVEXITY_INCONCLUSIVE = 1,   /* certificate failed, no violation */
    WPT_CONVEXITY_VIOLATION = 2       /* measured negative curvature */
} wpt_convexity_status;

typedef struct wpt_convexity_row {
    double u;
    double q_rf;
    double i_out;
    double p_dc;
    double second_diff_pdc;
    double second_diff_iout;
    double cond_curvature;  /* rho_dd - rho_d^2 / rho along the curve */
    double cond_reciprocal; /* q_dd * q - q_d^2 */
} wpt_convexity_row;

typedef struct wpt_convexity_summary {
    double second_diff_min_pdc;
    double second_diff_min_iout;
    double cond_curvature_min;
    double cond_reciprocal_min;
    double pdc_max_abs;
    int verdict;              /* 1 if measured curvature is nonnegative */
    int cond_curvature_holds; /* 1 if the analytic certificate holds */
    int cond_reciprocal_holds;
    wpt_convexity_status status;
} wpt_convexity_summary;

/* Probes convexity of i_out and p_dc versus u along q(u) = curve_scale / u
 * over a strictly increasing positive grid of at least 5 points. */
WPT_API wpt_status wpt_certify_convexity(const wpt_model* model, double curve_scale,
                                         const double* u_grid, size_t count,
                                         wpt_report** out);

WPT_API void wpt_report_free(wpt_report* report);
WPT_API size_t wpt_report_size(const wpt_report* report);
WPT_API wpt_status wpt_report_row(const wpt_report* report, size_t index,
                                  wpt_convexity_row* out);
WPT_API wpt_status wpt_report_summary(const wpt_report* report, wpt_convexity_summary* out);

/* ------------------------------------------------------------------ */
/* Scenarios                                                           */
/* ------------------------------------------------------------------ */

typedef struct wpt_scenario wpt_scenario;

WPT_API wpt_status wpt_scenario_load_file(const char* path, wpt_scenario** out);
WPT_API wpt_status wpt_scenario_load_text(const char* json_text, wpt_scenario** out);

/* n receivers uniform in [0, width]^2 from the seed, defaults elsewhere. */
WPT_API wpt_status wpt_scenario_generate(int n_receivers, double width, uint64_t seed,
                                         wpt_scenario** out);

WPT_API void wpt_scenario_free(wpt_scenario* scenario);

/* Canonical JSON text of the scenario; free with wpt_string_free. */
WPT_API wpt_status wpt_scenario_to_json(const wpt_scenario* scenario, char** out);
WPT_API wpt_status wpt_scenario_save_file(const wpt_scenario* scenario, const char* path);
WPT_API void wpt_string_free(char* text);

WPT_API size_t wpt_scenario_receiver_count(const wpt_scenario* scenario);
WPT_API wpt_status wpt_scenario_receiver(const wpt_scenario* scenario, size_t index,
                                         double* x, double* y);
WPT_API wpt_status wpt_scenario_box(const wpt_scenario* scenario, double* x_min,
                                    double* x_max, double* y_min, double* y_max);
WPT_API wpt_status wpt_scenario_q0(const wpt_scenario* scenario, double* dbm, double* watts);

/* Harvest model of the scenario; borrowed, valid while the scenario lives. */
WPT_API const wpt_model* wpt_scenario_model(const wpt_scenario* scenario);

/* Worst receiver's harvested DC power with the transmitter at (x, y). */
WPT_API wpt_status wpt_min_harvest(const wpt_scenario* scenario, double x, double y,
                                   double* out);

/* ------------------------------------------------------------------ */
/* Positioning                                                         */
/* ------------------------------------------------------------------ */

typedef struct wpt_trace wpt_trace;

typedef enum wpt_stop_reason {
    WPT_STOP_TOLERANCE = 0,
    WPT_STOP_MAX_ITERS = 1
} wpt_stop_reason;

/* Successive inner approximation from the given start point.  The returned
 * trace's certified-bound sequence is nondecreasing; entry 0 is the start
 * point itself. */
WPT_API wpt_status wpt_sia_solve(const wpt_scenario* scenario, double init_x, double init_y,
                                 int max_iters, double rel_tol, wpt_trace** out);

WPT_API void wpt_trace_free(wpt_trace* trace);
WPT_API size_t wpt_trace_size(const wpt_trace* trace);
WPT_API wpt_status wpt_trace_entry(const wpt_trace* trace, size_t index, double* x, double* y,
                                   double* certified_bound, double* objective,
                                   int* floor_clamped);
/* Surrogate slopes recorded for entry index; borrowed array (may be empty
 * for entry 0 of a never-iterated trace). */
WPT_API wpt_status wpt_trace_slopes(const wpt_trace* trace, size_t index,
                                    const double** slopes, size_t* count);
WPT_API int wpt_trace_converged(const wpt_trace* trace);
WPT_API wpt_stop_reason wpt_trace_stop_reason(const wpt_trace* trace);
WPT_API wpt_status wpt_trace_final(const wpt_trace* trace, double* x, double* y,
                                   double* value);

typedef struct wpt_grid_result {
    double best_x;
    double best_y;
    double best_value;
    double resolution;
    double neighbor_rel_diff;
    uint64_t cells;
} wpt_grid_result;

/* Dense sweep of the min-harvest objective over the scenario box.  Refuses
 * grids beyond 4,000,000 cells unless allow_large is nonzero. */
WPT_API wpt_status wpt_exhaustive_search(const wpt_scenario* scenario, double resolution,
                                         int allow_large, wpt_grid_result* out);

#ifdef __cplusplus
}
#endif

#endif /* WPT_WPT_H */
