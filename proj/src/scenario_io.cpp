#include "scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace wpt {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const char* where,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ParseError(std::string("scenario: unknown field '") + where + key + "'");
        }
    }
}

double number_at(const json& v, const std::string& field) {
    if (!v.is_number()) {
        throw ParseError("scenario: field '" + field + "' must be a number");
    }
    return v.get<double>();
}

int int_at(const json& v, const std::string& field) {
    if (!v.is_number_integer()) {
        throw ParseError("scenario: field '" + field + "' must be an integer");
    }
    return v.get<int>();
}

Waveform parse_waveform(const json& v) {
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        // Builtins carry factors for any order; materialize generously so a
        // later trunc_order change in the same file cannot outrun them.
        if (name == "cw") return Waveform::builtin(WaveformKind::ContinuousWave, 32);
        if (name == "gaussian") return Waveform::builtin(WaveformKind::RealGaussian, 32);
        throw ParseError("scenario: field 'waveform' names unknown builtin '" + name +
                         "' (expected \"cw\" or \"gaussian\")");
    }
    if (v.is_object()) {
        std::map<int, double> factors;
        for (const auto& [key, value] : v.items()) {
            int order = 0;
            try {
                std::size_t used = 0;
                order = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("scenario: field 'waveform." + key +
                                 "' is not an even moment order");
            }
            factors[order] = number_at(value, "waveform." + key);
        }
        return Waveform::custom(factors);
    }
    throw ParseError("scenario: field 'waveform' must be a builtin name or a factor map");
}

}  // namespace

Scenario load_scenario_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("scenario: top level must be a JSON object");
    }
    reject_unknown_keys(root, "",
                        {"receivers", "q0_dbm", "box", "diode", "waveform", "tx_power_dbm"});

    if (!root.contains("receivers")) {
        throw ParseError("scenario: required field 'receivers' is missing");
    }
    const json& recv = root["receivers"];
    if (!recv.is_array() || recv.empty()) {
        throw ParseError("scenario: field 'receivers' must be a non-empty array");
    }
    std::vector<Point> receivers;
    receivers.reserve(recv.size());
    for (std::size_t n = 0; n < recv.size(); ++n) {
        const json& item = recv[n];
        const std::string field = "receivers[" + std::to_string(n) + "]";
        if (!item.is_array() || item.size() != 2) {
            throw ParseError("scenario: field '" + field + "' must be an [x, y] pair");
        }
        receivers.push_back(
            {number_at(item[0], field + "[0]"), number_at(item[1], field + "[1]")});
    }

    double q0_dbm = 10.0;
    if (root.contains("q0_dbm")) q0_dbm = number_at(root["q0_dbm"], "q0_dbm");

    std::optional<Box> box;
    if (root.contains("box")) {
        const json& b = root["box"];
        if (!b.is_object()) {
            throw ParseError("scenario: field 'box' must be an object");
        }
        reject_unknown_keys(b, "box.", {"x_min", "x_max", "y_min", "y_max"});
        for (const char* k : {"x_min", "x_max", "y_min", "y_max"}) {
            if (!b.contains(k)) {
                throw ParseError(std::string("scenario: field 'box.") + k + "' is missing");
            }
        }
        box = Box{number_at(b["x_min"], "box.x_min"), number_at(b["x_max"], "box.x_max"),
                  number_at(b["y_min"], "box.y_min"), number_at(b["y_max"], "box.y_max")};
    }

    RectifierParams params;
    if (root.contains("diode")) {
        const json& d = root["diode"];
        if (!d.is_object()) {
            throw ParseError("scenario: field 'diode' must be an object");
        }
        reject_unknown_keys(d, "diode.", {"i_s", "n", "v_t", "r_ant", "r_load", "trunc_order"});
        if (d.contains("i_s")) params.i_s = number_at(d["i_s"], "diode.i_s");
        if (d.contains("n")) params.n_ideality = number_at(d["n"], "diode.n");
        if (d.contains("v_t")) params.v_t = number_at(d["v_t"], "diode.v_t");
        if (d.contains("r_ant")) params.r_ant = number_at(d["r_ant"], "diode.r_ant");
        if (d.contains("r_load")) params.r_load = number_at(d["r_load"], "diode.r_load");
        if (d.contains("trunc_order")) {
            params.trunc_order = int_at(d["trunc_order"], "diode.trunc_order");
        }
    }

    Waveform waveform = root.contains("waveform")
                            ? parse_waveform(root["waveform"])
                            : Waveform::builtin(WaveformKind::ContinuousWave, 32);

    std::optional<double> tx_power_dbm;
    if (root.contains("tx_power_dbm")) {
        tx_power_dbm = number_at(root["tx_power_dbm"], "tx_power_dbm");
    }

    return make_scenario(std::move(receivers), q0_dbm, box, params, waveform, tx_power_dbm);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("scenario: cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("scenario: failed reading '" + path + "'");
    }
    return load_scenario_text(buf.str());
}

std::string save_scenario_text(const Scenario& sc) {
    json root;
    json recv = json::array();
    for (const Point& r : sc.receivers) {
        recv.push_back(json::array({r.x, r.y}));
    }
    root["receivers"] = std::move(recv);
    root["q0_dbm"] = sc.q0_dbm;
    root["box"] = {{"x_min", sc.box.x_min},
                   {"x_max", sc.box.x_max},
                   {"y_min", sc.box.y_min},
                   {"y_max", sc.box.y_max}};
    const RectifierParams& p = sc.model.params();
    root["diode"] = {{"i_s", p.i_s},     {"n", p.n_ideality},
                     {"v_t", p.v_t},     {"r_ant", p.r_ant},
                     {"r_load", p.r_load}, {"trunc_order", p.trunc_order}};
    if (sc.waveform.is_builtin()) {
        root["waveform"] = sc.waveform.name();
    } else {
        json factors = json::object();
        for (const auto& [order, value] : sc.waveform.factors()) {
            if (order == 2) continue;  // implicit normalization, never stored
            factors[std::to_string(order)] = value;
        }
        root["waveform"] = std::move(factors);
    }
    if (sc.tx_power_dbm) {
        root["tx_power_dbm"] = *sc.tx_power_dbm;
    }
    return root.dump(2) + "\n";
}

void save_scenario_file(const Scenario& sc, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("scenario: cannot open '" + path + "' for writing");
    }
    out << save_scenario_text(sc);
    if (!out.flush()) {
        throw IoError("scenario: failed writing '" + path + "'");
    }
}

}  // namespace wpt
