#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "scenario_io.hpp"

using namespace wpt;

namespace {

std::string fixture_path(const char* name) {
    return std::string(WPT_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("minimal document fills every default") {
    const Scenario sc = load_scenario_text(R"({"receivers": [[0, 0], [1, 2]]})");
    REQUIRE(sc.receivers.size() == 2);
    CHECK(sc.receivers[1].x == 1.0);
    CHECK(sc.receivers[1].y == 2.0);
    CHECK(sc.q0_dbm == 10.0);
    CHECK(sc.q0_w == doctest::Approx(0.01).epsilon(1e-15));  // 10 dBm -> 10 mW
    CHECK(sc.box.x_min == 0.0);  // bounding box of the receivers
    CHECK(sc.box.x_max == 1.0);
    CHECK(sc.box.y_max == 2.0);
    CHECK(sc.model.params().i_s == 5e-6);
    CHECK(sc.model.params().r_load == 5000.0);
    CHECK(sc.waveform.is_builtin());
    CHECK(sc.waveform.name() == "cw");
    CHECK_FALSE(sc.tx_power_dbm.has_value());
}

TEST_CASE("builtin fixture survives a byte-identical round trip") {
    const std::string path = fixture_path("basic_cw.json");
    const Scenario sc = load_scenario_file(path);

    CHECK(sc.receivers.size() == 3);
    CHECK(sc.q0_dbm == 12.5);
    CHECK(sc.box.x_max == 5.0);
    CHECK(sc.model.params().i_s == 1e-6);
    CHECK(sc.model.params().r_ant == 75.0);
    CHECK(sc.model.params().trunc_order == 6);
    CHECK(sc.waveform.name() == "cw");
    REQUIRE(sc.tx_power_dbm.has_value());
    CHECK(*sc.tx_power_dbm == 30.0);

    CHECK(save_scenario_text(sc) == slurp(path));
}

TEST_CASE("custom waveform fixture survives a byte-identical round trip") {
    const std::string path = fixture_path("custom_waveform.json");
    const Scenario sc = load_scenario_file(path);

    CHECK_FALSE(sc.waveform.is_builtin());
    CHECK(sc.waveform.factor(4) == 2.2);
    CHECK(sc.waveform.factor(6) == 9.5);
    CHECK(sc.waveform.factor(2) == 1.0);  // normalization, implicit in files

    CHECK(save_scenario_text(sc) == slurp(path));
}

TEST_CASE("save and reload preserves a programmatic scenario") {
    RectifierParams p;
    p.trunc_order = 8;
    const Scenario sc =
        make_scenario({{0.25, -1.5}, {3.0, 2.0}}, 17.25, Box{-1.0, 4.0, -2.0, 3.0}, p,
                      Waveform::builtin(WaveformKind::RealGaussian, 8), 27.0);
    const std::string text = save_scenario_text(sc);
    const Scenario back = load_scenario_text(text);

    CHECK(back.q0_dbm == sc.q0_dbm);
    CHECK(back.q0_w == sc.q0_w);
    CHECK(back.box.x_min == sc.box.x_min);
    CHECK(back.box.y_max == sc.box.y_max);
    CHECK(back.receivers[0].y == sc.receivers[0].y);
    CHECK(back.waveform.name() == "gaussian");
    CHECK(back.model.params().trunc_order == 8);
    REQUIRE(back.tx_power_dbm.has_value());
    CHECK(*back.tx_power_dbm == 27.0);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(save_scenario_text(back) == text);
}

TEST_CASE("file writes land on disk and reload") {
    const std::string path = "io_roundtrip_tmp.json";
    const Scenario sc = load_scenario_text(R"({"receivers": [[0, 0], [2, 1]]})");
    save_scenario_file(sc, path);
    const Scenario back = load_scenario_file(path);
    CHECK(back.receivers.size() == 2);
    CHECK(save_scenario_text(back) == save_scenario_text(sc));
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_scenario_file("definitely/not/here.json"), IoError);
    CHECK_THROWS_AS(save_scenario_file(sc, "definitely/not/here.json"), IoError);
}

TEST_CASE("malformed json is a parse error") {
    CHECK_THROWS_AS(load_scenario_text("{"), ParseError);
    CHECK_THROWS_AS(load_scenario_text("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS(load_scenario_text("42"), ParseError);
}

TEST_CASE("strict mode names the offending field") {
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"receivers": [[0,0]], "speed": 3})"),
                         doctest::Contains("'speed'"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_scenario_text(
            R"({"receivers": [[0,0]], "box": {"x_min":0,"x_max":1,"y_min":0,"y_max":1,"z":2}})"),
        doctest::Contains("'box.z'"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_scenario_text(R"({"receivers": [[0,0]], "diode": {"beta": 1}})"),
        doctest::Contains("'diode.beta'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"q0_dbm": 10})"),
                         doctest::Contains("'receivers'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"receivers": [[0,0], [1]]})"),
                         doctest::Contains("'receivers[1]'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"receivers": [[0,"a"]]})"),
                         doctest::Contains("'receivers[0][1]'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"receivers": [[0,0]], "q0_dbm": "loud"})"),
                         doctest::Contains("'q0_dbm'"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_scenario_text(R"({"receivers": [[0,0]], "box": {"x_min":0,"x_max":1,"y_min":0}})"),
        doctest::Contains("'box.y_max'"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_scenario_text(R"({"receivers": [[0,0]], "diode": {"trunc_order": 4.5}})"),
        doctest::Contains("'diode.trunc_order'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scenario_text(R"({"receivers": [[0,0]], "waveform": "square"})"),
                         doctest::Contains("square"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_scenario_text(R"({"receivers": [[0,0]], "waveform": {"four": 2.0}})"),
        doctest::Contains("waveform.four"), ParseError);
    CHECK_THROWS_AS(load_scenario_text(R"({"receivers": [[0,0]], "waveform": 7})"), ParseError);
}

TEST_CASE("semantic violations surface as validation errors") {
    // Odd moment order: structurally fine JSON, semantically rejected.
    CHECK_THROWS_AS(load_scenario_text(R"({"receivers": [[0,0]], "waveform": {"3": 2.0}})"),
                    ValidationError);
    // Receiver outside the declared box.
    CHECK_THROWS_WITH_AS(
        load_scenario_text(
            R"({"receivers": [[9,9]], "box": {"x_min":0,"x_max":1,"y_min":0,"y_max":1}})"),
        doctest::Contains("receiver 0"), ValidationError);
    // Unusable diode parameters.
    CHECK_THROWS_AS(load_scenario_text(R"({"receivers": [[0,0]], "diode": {"i_s": -1.0}})"),
                    ValidationError);
    CHECK_THROWS_AS(
        load_scenario_text(R"({"receivers": [[0,0]], "diode": {"trunc_order": 3}})"),
        ValidationError);
}
