#include "mit/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace mit {

double norm(Vec2 v) { return std::hypot(v.dx, v.dy); }

double triangle_area(Point2 a, Point2 b, Point2 c) {
    // Fixed evaluation order, so every permutation rounds identically.
    auto less = [](Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
    if (less(b, a)) std::swap(a, b);
    if (less(c, b)) std::swap(b, c);
    if (less(b, a)) std::swap(a, b);
    return 0.5 * std::abs(wedge(b - a, c - a));
}

Direction Direction::from_components(double ux, double uy) {
    if (!std::isfinite(ux) || !std::isfinite(uy)) {
        throw std::invalid_argument("direction components must be finite");
    }
    const double len = std::hypot(ux, uy);
    if (len == 0.0) {
        throw std::invalid_argument("direction must be a nonzero vector");
    }
    return Direction(ux / len, uy / len);
}

Direction Direction::from_angle(double theta) { return from_components(std::cos(theta), std::sin(theta)); }

const char* to_string(PolygonErrorKind kind) {
    switch (kind) {
        case PolygonErrorKind::TooFewVertices: return "TooFewVertices";
        case PolygonErrorKind::NotConvex: return "NotConvex";
        case PolygonErrorKind::NotCounterClockwise: return "NotCounterClockwise";
        case PolygonErrorKind::NonFinite: return "NonFinite";
    }
    return "Unknown";
}

double signed_area(std::span<const Point2> points) {
    const std::size_t n = points.size();
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = points[i];
        const Point2 q = points[(i + 1) % n];
        twice += p.x * q.y - p.y * q.x;
    }
    return 0.5 * twice;
}

double ConvexPolygon::signed_area() const { return mit::signed_area(vertices_); }

namespace {

// Strict left turn at q, relative to the lengths of the two edges.
bool strictly_left(Point2 p, Point2 q, Point2 r) {
    const Vec2 e1 = q - p;
    const Vec2 e2 = r - q;
    return wedge(e1, e2) > kRelTol * norm(e1) * norm(e2);
}

}  // namespace

ConvexPolygon validate_polygon(std::vector<Point2> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
            throw PolygonError(PolygonErrorKind::NonFinite, i,
                               "vertex " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    const std::size_t n = points.size();
    if (n < 3) {
        throw PolygonError(PolygonErrorKind::TooFewVertices, std::nullopt,
                           "polygon has " + std::to_string(n) + " vertices, at least 3 required");
    }
    if (!(signed_area(points) > 0.0)) {
        throw PolygonError(PolygonErrorKind::NotCounterClockwise, std::nullopt,
                           "vertices are not in counter-clockwise order (signed area <= 0)");
    }
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = points[i];
        const Point2 q = points[(i + 1) % n];
        const Point2 r = points[(i + 2) % n];
        if (!strictly_left(p, q, r)) {
            const std::size_t at = (i + 1) % n;
            throw PolygonError(PolygonErrorKind::NotConvex, at,
                               "vertex " + std::to_string(at) +
                                   " is not a strict left turn (reflex, collinear or duplicate)");
        }
        turning += std::atan2(wedge(q - p, r - q), dot(q - p, r - q));
    }
    // All left turns but winding more than once: a self-overlapping star.
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
        throw PolygonError(PolygonErrorKind::NotConvex, std::nullopt,
                           "boundary winds more than once around the interior");
    }
    const double diam = convex_diameter(points);
    return ConvexPolygon(std::move(points), diam);
}

std::vector<Point2> dedupe_collinear(std::vector<Point2> points) {
    bool changed = true;
    while (changed && points.size() >= 3) {
        changed = false;
        std::vector<Point2> kept;
        kept.reserve(points.size());
        const std::size_t n = points.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 prev = kept.empty() ? points[(i + n - 1) % n] : kept.back();
            const Point2 cur = points[i];
            const Point2 next = points[(i + 1) % n];
            const Vec2 e1 = cur - prev;
            const Vec2 e2 = next - cur;
            const bool duplicate = e1 == Vec2{} || e2 == Vec2{};
            const bool collinear = std::abs(wedge(e1, e2)) <= kRelTol * norm(e1) * norm(e2) && dot(e1, e2) > 0.0;
            if (duplicate || collinear) {
                changed = true;
                continue;
            }
            kept.push_back(cur);
        }
        points = std::move(kept);
    }
    return points;
}

double convex_diameter(std::span<const Point2> ccw) {
    const std::size_t n = ccw.size();
    if (n < 2) {
        return 0.0;
    }
    if (n == 2) {
        return norm(ccw[1] - ccw[0]);
    }
    double best = 0.0;
    std::size_t j = 1;
    std::size_t steps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t i1 = (i + 1) % n;
        const Vec2 e = ccw[i1] - ccw[i];
        while (steps < 3 * n && wedge(e, ccw[(j + 1) % n] - ccw[j]) > 0.0) {
            j = (j + 1) % n;
            ++steps;
        }
        best = std::max({best, norm(ccw[j] - ccw[i]), norm(ccw[j] - ccw[i1])});
    }
    return best;
}

std::size_t extreme_vertex(const ConvexPolygon& poly, const Direction& u, Extreme sense) {
    const auto verts = poly.vertices();
    const Vec2 dir = sense == Extreme::Max ? u.vec() : -u.vec();
    std::size_t best = 0;
    double best_val = dot(dir, verts[0] - Point2{});
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double val = dot(dir, verts[i] - Point2{});
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }
    const auto i = static_cast<long long>(best);
    const Vec2 fwd = poly.edge(i);
    const Vec2 back = poly.edge(i - 1);
    const double fwd_tilt = std::abs(dot(u.vec(), fwd)) / norm(fwd);
    const double back_tilt = std::abs(dot(u.vec(), back)) / norm(back);
    const bool tie_fwd = fwd_tilt <= kRelTol;
    const bool tie_back = back_tilt <= kRelTol;
    if (!tie_fwd && !tie_back) {
        return best;
    }
    const bool use_fwd = tie_fwd && (!tie_back || fwd_tilt <= back_tilt);
    // Tied edge is (i, i+1) or (i-1, i); its ccw end is the later index.
    if (sense == Extreme::Min) {
        return use_fwd ? poly.wrap(i + 1) : best;
    }
    return use_fwd ? best : poly.wrap(i - 1);
}

Point2 edge_point_coords(const ConvexPolygon& poly, EdgePoint e) {
    const auto i = static_cast<long long>(e.edge);
    const Point2 p = poly.vertex(i);
    if (e.frac == 0.0) {
        return p;
    }
    const Point2 q = poly.vertex(i + 1);
    if (e.frac == 1.0) {
        return q;
    }
    const double s = e.frac;
    return {p.x * (1.0 - s) + q.x * s, p.y * (1.0 - s) + q.y * s};
}

EdgePoint canonical_edge_point(const ConvexPolygon& poly, long long edge, double frac) {
    if (frac >= 1.0) {
        return {poly.wrap(edge + 1), 0.0};
    }
    return {poly.wrap(edge), std::max(frac, 0.0)};
}

}  // namespace mit
