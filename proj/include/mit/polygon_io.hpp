#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mit/geom_core.hpp"

namespace mit {

/// Malformed polygon text. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what) : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedPolygon {
    std::vector<Point2> points;
    /// Source line of each point, for diagnostics.
    std::vector<std::size_t> lines;
};

/// One vertex per line as two whitespace-separated decimals. Blank lines and
/// lines whose first non-blank character is '#' are skipped.
ParsedPolygon parse_polygon(std::istream& in);
ParsedPolygon parse_polygon_text(const std::string& text);
ParsedPolygon read_polygon_file(const std::string& path);

/// Shortest round-trip-safe rendering used everywhere in output (17 significant digits).
std::string format_real(double value);

/// Canonical polygon text: "x y\n" per vertex.
std::string format_polygon(std::span<const Point2> points);

}  // namespace mit
