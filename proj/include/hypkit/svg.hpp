#pragma once

// SVG rendering of a construction state on a 1000 x 1000 canvas, the unit
// disk mapped to x = 500 + 500 u, y = 500 - 500 v. Only circle, path (arc),
// line and text elements are emitted. Each named line, curve and point
// becomes one element whose id is the object name.

#include <string>

#include "hypkit/construction.hpp"

namespace hypkit {

inline constexpr double kSvgSize = 1000.0;

/// Angle marks are drawn for the angle assertions recorded in the state's log.
std::string render_svg(const ConstructionState& state);

}  // namespace hypkit
