#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mit/geom_core.hpp"

namespace mit {

enum class PolygonKind { Regular, Jittered, HullOfRandom };

const char* to_string(PolygonKind kind);
std::optional<PolygonKind> parse_polygon_kind(std::string_view name);

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Attempts made by the jittered generator before giving up.
inline constexpr int kJitterRetries = 16;

/// Circumradius-1 regular n-gon with vertex k at angle 2πk/n.
std::vector<Point2> regular_polygon(std::size_t n);

/// Default radial noise amplitude for jittered_polygon: a fraction of the
/// sagitta of a regular n-gon, capped at 0.25.
double default_jitter_amplitude(std::size_t n);

/// Regular n-gon with vertex radii 1 + amplitude·U(−1, 1). Draws are repeated
/// until validate_polygon accepts the result or kJitterRetries is exhausted.
std::vector<Point2> jittered_polygon(std::size_t n, std::uint64_t seed, std::optional<double> amplitude = {});

/// Convex hull of n points uniform in the unit disk, collinear vertices
/// removed. May return fewer than n vertices.
std::vector<Point2> hull_of_random(std::size_t n, std::uint64_t seed);

std::vector<Point2> generate_polygon(PolygonKind kind, std::size_t n, std::uint64_t seed);

/// Counter-clockwise convex hull (Andrew's monotone chain), collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// Platform-independent uniform doubles in [0, 1) from a seeded mt19937_64.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed);
    double next();
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace mit
