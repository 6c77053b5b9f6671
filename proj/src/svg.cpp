#include "mit/svg.hpp"

#include <algorithm>
#include <limits>

#include "mit/polygon_io.hpp"

namespace mit {

namespace {

void append_points(std::string& out, std::span<const Point2> pts) {
    bool first = true;
    for (const Point2& p : pts) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += format_real(p.x);
        out += ',';
        // SVG's y axis points down.
        out += format_real(-p.y);
    }
}

}  // namespace

std::string render_svg(std::span<const Point2> polygon, std::span<const TriangleCoords> triangles,
                       const SvgStyle& style) {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    for (const Point2& p : polygon) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    if (polygon.empty()) {
        x0 = y0 = 0.0;
        x1 = y1 = 1.0;
    }
    double w = x1 - x0;
    double h = y1 - y0;
    const double pad = 0.05 * std::max(std::max(w, h), std::numeric_limits<double>::min());
    x0 -= pad;
    y0 -= pad;
    w += 2.0 * pad;
    h += 2.0 * pad;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
    out += format_real(x0) + ' ' + format_real(-(y0 + h)) + ' ' + format_real(w) + ' ' + format_real(h);
    out += "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    out += "<g stroke-linejoin=\"round\">\n";
    for (const TriangleCoords& t : triangles) {
        out += "<polygon class=\"triangle\" fill=\"" + style.triangle_fill + "\" fill-opacity=\"" +
               format_real(style.triangle_opacity) + "\" stroke=\"" + style.triangle_fill +
               "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"";
        append_points(out, t);
        out += "\"/>\n";
    }
    out += "<polygon class=\"outline\" fill=\"none\" stroke=\"" + style.polygon_stroke +
           "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"";
    append_points(out, polygon);
    out += "\"/>\n</g>\n</svg>\n";
    return out;
}

}  // namespace mit
