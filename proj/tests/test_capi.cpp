#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <wpt/wpt.h>

namespace {

wpt_model* make_default_model() {
    wpt_diode_params p;
    wpt_diode_params_defaults(&p);
    wpt_model* m = nullptr;
    REQUIRE(wpt_model_create(&p, "cw", &m) == WPT_OK);
    return m;
}

std::string tmp_path(const char* name) {
    return std::string(WPT_TEST_TMP) + "/" + name;
}

}  // namespace

TEST_CASE("defaults match the documented diode values") {
    wpt_diode_params p;
    wpt_diode_params_defaults(&p);
    CHECK(p.i_s == 5e-6);
    CHECK(p.n_ideality == 1.05);
    CHECK(p.v_t == 0.02586);
    CHECK(p.r_ant == 50.0);
    CHECK(p.r_load == 5000.0);
    CHECK(p.trunc_order == 4);
}

TEST_CASE("status names are stable identifiers") {
    CHECK(std::strcmp(wpt_status_name(WPT_OK), "ok") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_INVALID_ARGUMENT), "invalid_argument") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_PARSE), "parse_error") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_IO), "io_error") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_DOMAIN), "domain_error") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_NO_CONVERGENCE), "no_convergence") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_GRID_TOO_LARGE), "grid_too_large") == 0);
    CHECK(std::strcmp(wpt_status_name(WPT_ERR_INTERNAL), "internal_error") == 0);
}

TEST_CASE("model solve reproduces the frozen operating point") {
    wpt_model* m = make_default_model();

    double i = 0.0, p = 0.0, r = 0.0;
    REQUIRE(wpt_solve_iout(m, 0.01, &i) == WPT_OK);
    CHECK(i == doctest::Approx(4.3478801468194423e-05).epsilon(1e-13));
    REQUIRE(wpt_p_dc(m, 0.01, &p) == WPT_OK);
    CHECK(p == doctest::Approx(9.4520308855533264e-06).epsilon(1e-12));
    REQUIRE(wpt_rho(m, 0.01, &r) == WPT_OK);
    CHECK(r == doctest::Approx(0.14542091931067491).epsilon(1e-14));

    double w = 0.0;
    REQUIRE(wpt_lambert_w0(1.0, &w) == WPT_OK);
    CHECK(w == doctest::Approx(0.56714329040978384).epsilon(1e-15));

    double di = 0.0, dp = 0.0;
    REQUIRE(wpt_diout_drho(m, 0.01, &di) == WPT_OK);
    CHECK(di > 0.0);
    REQUIRE(wpt_dpdc_dd(m, 0.01, 2.0, &dp) == WPT_OK);
    CHECK(dp < 0.0);

    wpt_model_free(m);
}

TEST_CASE("null and invalid arguments report invalid_argument") {
    wpt_diode_params p;
    wpt_diode_params_defaults(&p);
    wpt_model* m = nullptr;

    CHECK(wpt_model_create(nullptr, "cw", &m) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(wpt_last_error()) > 0);
    CHECK(wpt_model_create(&p, nullptr, &m) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(wpt_model_create(&p, "cw", nullptr) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(wpt_model_create(&p, "triangle", &m) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wpt_last_error()).find("triangle") != std::string::npos);

    wpt_diode_params bad = p;
    bad.trunc_order = 5;
    CHECK(wpt_model_create(&bad, "cw", &m) == WPT_ERR_INVALID_ARGUMENT);

    double out = 0.0;
    CHECK(wpt_rho(nullptr, 0.01, &out) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(wpt_lambert_w0(1.0, nullptr) == WPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("custom factor models validate coverage up to the truncation") {
    wpt_diode_params p;
    wpt_diode_params_defaults(&p);
    p.trunc_order = 6;

    const int orders[2] = {4, 6};
    const double factors[2] = {2.2, 9.5};
    wpt_model* m = nullptr;
    REQUIRE(wpt_model_create_custom(&p, orders, factors, 2, &m) == WPT_OK);
    double v = 0.0;
    CHECK(wpt_p_dc(m, 1e-3, &v) == WPT_OK);
    CHECK(v > 0.0);
    wpt_model_free(m);

    // Order 6 required by trunc_order but missing from the table.
    const int short_orders[1] = {4};
    const double short_factors[1] = {2.2};
    m = nullptr;
    CHECK(wpt_model_create_custom(&p, short_orders, short_factors, 1, &m) ==
          WPT_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wpt_last_error()).find("order") != std::string::npos);
    CHECK(wpt_model_create_custom(&p, nullptr, short_factors, 1, &m) ==
          WPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("domain violations map to domain_error") {
    wpt_model* m = make_default_model();
    double out = 0.0;
    CHECK(wpt_rho(m, -1.0, &out) == WPT_ERR_DOMAIN);
    CHECK(std::strlen(wpt_last_error()) > 0);
    CHECK(wpt_lambert_w0(-0.5, &out) == WPT_ERR_DOMAIN);
    CHECK(wpt_dpdc_dd(m, 0.01, 0.0, &out) == WPT_ERR_DOMAIN);
    wpt_model_free(m);
}

TEST_CASE("convexity reports expose rows and summary") {
    wpt_model* m = make_default_model();
    std::vector<double> grid;
    for (int k = 0; k < 40; ++k) grid.push_back(1.0 + 0.25 * k);

    wpt_report* rep = nullptr;
    REQUIRE(wpt_certify_convexity(m, 1.0, grid.data(), grid.size(), &rep) == WPT_OK);
    CHECK(wpt_report_size(rep) == 40);

    wpt_convexity_row row;
    REQUIRE(wpt_report_row(rep, 0, &row) == WPT_OK);
    CHECK(row.u == 1.0);
    CHECK(row.q_rf == 1.0);
    CHECK(row.cond_reciprocal > 0.0);
    CHECK(wpt_report_row(rep, 40, &row) == WPT_ERR_INVALID_ARGUMENT);

    wpt_convexity_summary sum;
    REQUIRE(wpt_report_summary(rep, &sum) == WPT_OK);
    CHECK(sum.status == WPT_CONVEXITY_CERTIFIED);
    CHECK(sum.verdict == 1);
    CHECK(sum.cond_curvature_holds == 1);
    CHECK(sum.cond_reciprocal_holds == 1);
    wpt_report_free(rep);

    // Grid too short.
    CHECK(wpt_certify_convexity(m, 1.0, grid.data(), 3, &rep) == WPT_ERR_INVALID_ARGUMENT);
    wpt_model_free(m);
}

TEST_CASE("scenario text round trips byte for byte") {
    const char* text = R"({"receivers": [[0.5, 0.5], [4.5, 1.0]], "q0_dbm": 12.0})";
    wpt_scenario* sc = nullptr;
    REQUIRE(wpt_scenario_load_text(text, &sc) == WPT_OK);

    CHECK(wpt_scenario_receiver_count(sc) == 2);
    double x = 0.0, y = 0.0;
    REQUIRE(wpt_scenario_receiver(sc, 1, &x, &y) == WPT_OK);
    CHECK(x == 4.5);
    CHECK(y == 1.0);
    CHECK(wpt_scenario_receiver(sc, 2, &x, &y) == WPT_ERR_INVALID_ARGUMENT);

    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    REQUIRE(wpt_scenario_box(sc, &x0, &x1, &y0, &y1) == WPT_OK);
    CHECK(x0 == 0.5);
    CHECK(x1 == 4.5);

    double dbm = 0.0, watts = 0.0;
    REQUIRE(wpt_scenario_q0(sc, &dbm, &watts) == WPT_OK);
    CHECK(dbm == 12.0);
    CHECK(watts == doctest::Approx(std::pow(10.0, -1.8)).epsilon(1e-15));

    char* json1 = nullptr;
    REQUIRE(wpt_scenario_to_json(sc, &json1) == WPT_OK);
    wpt_scenario* sc2 = nullptr;
    REQUIRE(wpt_scenario_load_text(json1, &sc2) == WPT_OK);
    char* json2 = nullptr;
    REQUIRE(wpt_scenario_to_json(sc2, &json2) == WPT_OK);
    CHECK(std::string(json1) == std::string(json2));
    wpt_string_free(json1);
    wpt_string_free(json2);
    wpt_scenario_free(sc2);

    // The embedded model is borrowed and usable directly.
    const wpt_model* m = wpt_scenario_model(sc);
    REQUIRE(m != nullptr);
    double manual = 0.0;
    REQUIRE(wpt_p_dc(m, watts / 16.25, &manual) == WPT_OK);  // farthest at d = 16.25
    double worst = 0.0;
    REQUIRE(wpt_min_harvest(sc, 0.5, 0.5, &worst) == WPT_OK);
    CHECK(worst == doctest::Approx(manual).epsilon(1e-13));

    wpt_scenario_free(sc);
}

TEST_CASE("scenario files save and load through the api") {
    wpt_scenario* sc = nullptr;
    REQUIRE(wpt_scenario_generate(4, 5.0, 77, &sc) == WPT_OK);
    const std::string path = tmp_path("capi_scenario.json");
    REQUIRE(wpt_scenario_save_file(sc, path.c_str()) == WPT_OK);

    wpt_scenario* back = nullptr;
    REQUIRE(wpt_scenario_load_file(path.c_str(), &back) == WPT_OK);
    CHECK(wpt_scenario_receiver_count(back) == 4);

    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(wpt_scenario_to_json(sc, &a) == WPT_OK);
    REQUIRE(wpt_scenario_to_json(back, &b) == WPT_OK);
    CHECK(std::string(a) == std::string(b));
    wpt_string_free(a);
    wpt_string_free(b);
    wpt_scenario_free(back);
    wpt_scenario_free(sc);
    std::remove(path.c_str());

    CHECK(wpt_scenario_load_file("nope/missing.json", &back) == WPT_ERR_IO);
    CHECK(wpt_scenario_load_text("{]", &back) == WPT_ERR_PARSE);
    CHECK(wpt_scenario_load_text(R"({"receivers": []})", &back) == WPT_ERR_PARSE);
    CHECK(wpt_scenario_generate(0, 5.0, 1, &back) == WPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("positioning trace is monotone and self-consistent") {
    wpt_scenario* sc = nullptr;
    REQUIRE(wpt_scenario_generate(5, 5.0, 101, &sc) == WPT_OK);
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    REQUIRE(wpt_scenario_box(sc, &x0, &x1, &y0, &y1) == WPT_OK);

    wpt_trace* tr = nullptr;
    REQUIRE(wpt_sia_solve(sc, 0.5 * (x0 + x1), 0.5 * (y0 + y1), 50, 1e-6, &tr) == WPT_OK);
    CHECK(wpt_trace_converged(tr) == 1);
    CHECK(wpt_trace_stop_reason(tr) == WPT_STOP_TOLERANCE);

    const size_t n = wpt_trace_size(tr);
    REQUIRE(n >= 2);
    double prev = -1.0;
    for (size_t k = 0; k < n; ++k) {
        double x = 0.0, y = 0.0, bound = 0.0, objective = 0.0;
        int clamped = -1;
        REQUIRE(wpt_trace_entry(tr, k, &x, &y, &bound, &objective, &clamped) == WPT_OK);
        CHECK(bound >= prev);
        CHECK(bound <= objective + 1e-12);
        CHECK((clamped == 0 || clamped == 1));
        prev = bound;

        const double* slopes = nullptr;
        size_t count = 0;
        REQUIRE(wpt_trace_slopes(tr, k, &slopes, &count) == WPT_OK);
        CHECK(count == 5);
        for (size_t j = 0; j < count; ++j) CHECK(slopes[j] > 0.0);
    }

    double fx = 0.0, fy = 0.0, fv = 0.0;
    REQUIRE(wpt_trace_final(tr, &fx, &fy, &fv) == WPT_OK);
    CHECK(fv == prev);
    double check = 0.0;
    REQUIRE(wpt_min_harvest(sc, fx, fy, &check) == WPT_OK);
    CHECK(fv <= check + 1e-12);

    CHECK(wpt_trace_entry(tr, n, &fx, &fy, &fv, &check, nullptr) ==
          WPT_ERR_INVALID_ARGUMENT);
    wpt_trace_free(tr);

    // Bad starting point: outside the box.
    CHECK(wpt_sia_solve(sc, x1 + 1.0, y0, 50, 1e-6, &tr) == WPT_ERR_INVALID_ARGUMENT);
    wpt_scenario_free(sc);
}

TEST_CASE("grid sweep honors the cell cap through the api") {
    wpt_scenario* sc = nullptr;
    const char* text =
        R"({"receivers": [[0.5,0.5],[4.5,1.0],[2.0,4.0]],
            "box": {"x_min":0,"x_max":5,"y_min":0,"y_max":5}})";
    REQUIRE(wpt_scenario_load_text(text, &sc) == WPT_OK);

    wpt_grid_result res;
    REQUIRE(wpt_exhaustive_search(sc, 0.5, 0, &res) == WPT_OK);
    CHECK(res.cells == 121);
    CHECK(res.resolution == 0.5);
    CHECK(res.best_value > 0.0);
    CHECK(res.neighbor_rel_diff >= 0.0);

    CHECK(wpt_exhaustive_search(sc, 0.001, 0, &res) == WPT_ERR_GRID_TOO_LARGE);
    CHECK(std::string(wpt_last_error()).find("override") != std::string::npos);
    CHECK(wpt_exhaustive_search(sc, -1.0, 0, &res) == WPT_ERR_INVALID_ARGUMENT);
    CHECK(wpt_exhaustive_search(nullptr, 0.5, 0, &res) == WPT_ERR_INVALID_ARGUMENT);
    wpt_scenario_free(sc);
}
