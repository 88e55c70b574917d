#pragma once

#include <optional>
#include <string>

#include "fairsect/chord.hpp"

namespace fairsect {

struct RenderOptions {
    std::optional<Chord> chord;   // stroked as the single chord element
    bool draw_pieces = false;     // fill the two sides of the chord
    bool draw_diametral = true;   // dashed diametrical segments
    bool draw_width_strip = false;
    double attain_tol = 1e-9;
};

/// Standalone SVG: viewBox fitted to the body's bounding box with a 5%
/// margin, deterministic bytes for fixed inputs.
std::string render_svg(const ConvexPolygon& poly, const RenderOptions& opts);

}  // namespace fairsect
