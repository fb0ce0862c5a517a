#pragma once

#include <string>

#include "positioning.hpp"

namespace wpt {

// Parses a scenario from JSON text.  Strict: unknown keys are rejected and
// every violation names the offending field.  Schema:
//
//   {
//     "receivers": [[x, y], ...],          // required
//     "q0_dbm": 10.0,                      // optional, default 10
//     "box": {"x_min": ..., "x_max": ..., "y_min": ..., "y_max": ...},
//     "diode": {"i_s", "n", "v_t", "r_ant", "r_load", "trunc_order"},
//     "waveform": "cw" | "gaussian" | {"4": f4, "6": f6, ...},
//     "tx_power_dbm": 30.0                 // optional, informational
//   }
//
// Missing diode keys take the library defaults; the default waveform is "cw".
Scenario load_scenario_text(const std::string& json_text);

Scenario load_scenario_file(const std::string& path);

// Serializes a scenario in canonical form: fixed key order, two-space
// indentation, fully resolved fields, trailing newline.  Loading the output
// and saving again reproduces it byte for byte.
std::string save_scenario_text(const Scenario& sc);

void save_scenario_file(const Scenario& sc, const std::string& path);

}  // namespace wpt
