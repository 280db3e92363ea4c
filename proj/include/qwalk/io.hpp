#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/window.hpp"

namespace qwalk {

// State JSON: { "offset": int, "amps": [[[re,im], ... per component],
// ... per site] }.
std::string state_to_json(const WaveWindow& psi);
WaveWindow state_from_json(const std::string& text);

// CSV "x,<column>" with 17 significant digits. Leading/trailing rows with
// value < trim_below are dropped; this affects reporting only, never state.
void write_measure_csv(std::ostream& os, const MeasureWindow& mu,
                       const std::string& column = "value",
                       double trim_below = 1e-300);

}  // namespace qwalk
