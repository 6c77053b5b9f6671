#pragma once

#include <array>
#include <span>
#include <string>

#include "mit/geom_core.hpp"

namespace mit {

using TriangleCoords = std::array<Point2, 3>;

struct SvgStyle {
    std::string polygon_stroke = "#1f2937";
    std::string triangle_fill = "#2563eb";
    double triangle_opacity = 0.35;
};

/// Standalone SVG document: the polygon outline and translucent filled
/// triangles, y axis pointing up, viewBox fitted to the polygon's bounding box
/// plus a 5% margin.
std::string render_svg(std::span<const Point2> polygon, std::span<const TriangleCoords> triangles,
                       const SvgStyle& style = {});

}  // namespace mit
