#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mit/anchored.hpp"
#include "mit/geom_core.hpp"
#include "mit/maximizer.hpp"

// Slow, independent references used to check the linear-time code paths.
// Nothing here shares logic with anchored_search or the sweep.

namespace mit {

enum class OracleErrorKind { TooLarge, ParallelEdge };

class OracleError : public std::runtime_error {
public:
    OracleError(OracleErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    OracleErrorKind kind() const { return kind_; }

private:
    OracleErrorKind kind_;
};

inline constexpr std::size_t kBruteForceLimit = 2000;

/// Exact maximum over all C(n, 3) vertex triples. Ties keep the
/// lexicographically smallest (i < j < k) triple.
MaxResult brute_force_max_triangle(const ConvexPolygon& poly);

/// Linear piece of the chord width f(y) + g(y) on [y0, y1].
struct WidthPiece {
    double y0 = 0.0;
    double y1 = 0.0;
    double w0 = 0.0;
    double w1 = 0.0;
};

/// Slices of the polygon perpendicular to u, parameterized by height y = u·x.
/// The width is piecewise linear with breaks at vertex heights.
struct ChordProfile {
    Direction direction = Direction::from_components(1.0, 0.0);
    double y_min = 0.0;
    double y_max = 0.0;
    std::vector<double> breakpoints;
    std::vector<WidthPiece> pieces;

    /// Chord width at height y (clamped to [y_min, y_max]).
    double width(double y) const;
};

ChordProfile build_chord_profile(const ConvexPolygon& poly, const Direction& u);

/// Anchored triangle found by maximizing ½(y − y_min)·width(y) piece by piece
/// in closed form. Equal maxima resolve to the largest y.
AnchoredTriangle anchored_oracle(const ConvexPolygon& poly, const Direction& u);

/// Central difference of area(a, b'(h), c'(h)) at h = 0, where the chord bc is
/// shifted outward by h·|c − b| and b', c' are its intersections with the
/// lines through b along v and through c along w.
double finite_difference_area_derivative(Point2 a, Point2 b, Point2 c, Vec2 v, Vec2 w, double h);

}  // namespace mit
