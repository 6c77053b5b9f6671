#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mit {

/// Relative tolerance used for every "equals zero" comparison in the solver.
/// Length-like quantities are compared against kRelTol times a local length,
/// area-like quantities against kRelTol times a product of two lengths.
inline constexpr double kRelTol = 1e-9;

/// Edge fractions closer than this to an endpoint are snapped to the vertex.
inline constexpr double kFracTol = 1e-9;

struct Vec2 {
    double dx = 0.0;
    double dy = 0.0;

    friend constexpr Vec2 operator+(Vec2 v, Vec2 w) { return {v.dx + w.dx, v.dy + w.dy}; }
    friend constexpr Vec2 operator-(Vec2 v, Vec2 w) { return {v.dx - w.dx, v.dy - w.dy}; }
    friend constexpr Vec2 operator-(Vec2 v) { return {-v.dx, -v.dy}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.dx, s * v.dy}; }
    friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.dx, s * v.dy}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.dx, p.y + v.dy}; }
    friend constexpr Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.dx, p.y - v.dy}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Vec2 v, Vec2 w) { return v.dx * w.dx + v.dy * w.dy; }

/// v ∧ w = v.dx·w.dy − v.dy·w.dx
constexpr double wedge(Vec2 v, Vec2 w) { return v.dx * w.dy - v.dy * w.dx; }

double norm(Vec2 v);

/// Unsigned area of the triangle abc; bitwise symmetric in its arguments.
double triangle_area(Point2 a, Point2 b, Point2 c);

/// Unit vector in the plane. Only constructible through the factories, which
/// normalize and reject zero or non-finite input.
class Direction {
public:
    static Direction from_components(double ux, double uy);
    static Direction from_angle(double theta);

    double ux() const { return ux_; }
    double uy() const { return uy_; }
    Vec2 vec() const { return {ux_, uy_}; }
    /// Counter-clockwise perpendicular (−uy, ux).
    Vec2 perp() const { return {-uy_, ux_}; }

private:
    Direction(double ux, double uy) : ux_(ux), uy_(uy) {}
    double ux_;
    double uy_;
};

/// Point on the boundary: p_edge·(1 − frac) + p_{edge+1}·frac.
struct EdgePoint {
    std::size_t edge = 0;
    double frac = 0.0;

    friend bool operator==(const EdgePoint&, const EdgePoint&) = default;
};

enum class PolygonErrorKind { TooFewVertices, NotConvex, NotCounterClockwise, NonFinite };

const char* to_string(PolygonErrorKind kind);

class PolygonError : public std::runtime_error {
public:
    PolygonError(PolygonErrorKind kind, std::optional<std::size_t> vertex, const std::string& what)
        : std::runtime_error(what), kind_(kind), vertex_(vertex) {}

    PolygonErrorKind kind() const { return kind_; }
    /// Index of the offending vertex, when one can be named.
    std::optional<std::size_t> vertex() const { return vertex_; }

private:
    PolygonErrorKind kind_;
    std::optional<std::size_t> vertex_;
};

/// Strictly convex polygon with vertices in counter-clockwise order.
/// Immutable; obtain one through validate_polygon().
class ConvexPolygon {
public:
    std::size_t size() const { return vertices_.size(); }
    std::span<const Point2> vertices() const { return vertices_; }

    /// Vertex access with indices taken mod n (negative indices allowed).
    Point2 vertex(long long i) const { return vertices_[wrap(i)]; }
    /// p_{i+1} − p_i, indices mod n.
    Vec2 edge(long long i) const { return vertices_[wrap(i + 1)] - vertices_[wrap(i)]; }

    std::size_t wrap(long long i) const {
        const auto n = static_cast<long long>(vertices_.size());
        long long r = i % n;
        return static_cast<std::size_t>(r < 0 ? r + n : r);
    }

    double diameter() const { return diameter_; }
    double signed_area() const;

private:
    friend ConvexPolygon validate_polygon(std::vector<Point2> points);
    ConvexPolygon(std::vector<Point2> vertices, double diameter)
        : vertices_(std::move(vertices)), diameter_(diameter) {}

    std::vector<Point2> vertices_;
    double diameter_;
};

/// Accepts a strictly convex, counter-clockwise vertex list or throws PolygonError.
/// Collinear or duplicate consecutive vertices are rejected, never merged.
ConvexPolygon validate_polygon(std::vector<Point2> points);

/// Removes duplicate and (near-)collinear consecutive vertices. Never applied
/// implicitly; callers opt in before validation.
std::vector<Point2> dedupe_collinear(std::vector<Point2> points);

/// Signed shoelace area of an arbitrary vertex list.
double signed_area(std::span<const Point2> points);

/// Largest vertex-to-vertex distance of a convex polygon (rotating calipers, O(n)).
double convex_diameter(std::span<const Point2> ccw);

enum class Extreme { Min, Max };

/// Index of a vertex extremizing u·p. When an edge is perpendicular to u the
/// minimum resolves to the counter-clockwise end of that edge and the maximum
/// to the clockwise end.
std::size_t extreme_vertex(const ConvexPolygon& poly, const Direction& u, Extreme sense);

Point2 edge_point_coords(const ConvexPolygon& poly, EdgePoint e);

/// Maps a (possibly unwrapped) edge index and fraction in [0, 1] to the
/// canonical EdgePoint, where frac == 1 is folded into (edge + 1, 0).
EdgePoint canonical_edge_point(const ConvexPolygon& poly, long long edge, double frac);

}  // namespace mit
