#include "mit/anchored.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mit/evolution_formulas.hpp"

namespace mit {

const char* to_string(SweepErrorKind kind) {
    switch (kind) {
        case SweepErrorKind::IterationCapExceeded: return "IterationCapExceeded";
        case SweepErrorKind::NoAdmissibleStep: return "NoAdmissibleStep";
        case SweepErrorKind::NoVertexTriple: return "NoVertexTriple";
    }
    return "Unknown";
}

AnchoredState anchored_search(const ConvexPolygon& poly, const Direction& u) {
    const auto n = static_cast<long long>(poly.size());
    const Vec2 uv = u.vec();

    AnchoredState st;
    st.ia = static_cast<long long>(extreme_vertex(poly, u, Extreme::Min));
    st.ic = static_cast<long long>(extreme_vertex(poly, u, Extreme::Max));
    st.sc = 0.0;
    st.ib = st.ic - 1;
    st.sb = 1.0;
    const Point2 a = poly.vertex(st.ia);

    const std::size_t cap = 2 * poly.size() + 4;
    while (true) {
        if (++st.iterations > cap) {
            throw SweepError(SweepErrorKind::IterationCapExceeded,
                             "anchored search exceeded " + std::to_string(cap) + " iterations");
        }
        if (st.sb <= 0.0) {
            --st.ib;
            st.sb = 1.0;
        }
        if (st.sc >= 1.0) {
            ++st.ic;
            st.sc = 0.0;
        }
        const Point2 b = edge_point_coords(poly, {poly.wrap(st.ib), st.sb});
        const Point2 c = edge_point_coords(poly, {poly.wrap(st.ic), st.sc});
        const Vec2 eb = poly.edge(st.ib);
        const Vec2 ec = poly.edge(st.ic);

        // An edge perpendicular to u lies along the chord; sliding over it
        // keeps the chord perpendicular, so skip it whole.
        if (std::abs(dot(uv, eb)) <= kRelTol * norm(eb)) {
            --st.ib;
            st.sb = 1.0;
            continue;
        }
        if (std::abs(dot(uv, ec)) <= kRelTol * norm(ec)) {
            ++st.ic;
            st.sc = 0.0;
            continue;
        }
        // Chord width no longer grows as the chord moves towards a.
        const double spread = wedge(eb, ec);
        if (spread <= kRelTol * norm(eb) * norm(ec)) {
            break;
        }
        const double offset = calculate_tq(a, b, eb, c, ec, u) / (2.0 * spread);
        const double tb = -offset / dot(uv, eb);
        const double tc = offset / dot(uv, ec);
        if (tb <= 0.0 || tc <= 0.0) {
            break;
        }
        if (tb < st.sb && tc < 1.0 - st.sc) {
            st.sb -= tb;
            st.sc += tc;
            break;
        }
        if ((1.0 - st.sc) * tb < st.sb * tc) {
            // c reaches the end of its edge first.
            st.sb -= (1.0 - st.sc) * tb / tc;
            ++st.ic;
            st.sc = 0.0;
        } else {
            st.sc += st.sb * tc / tb;
            --st.ib;
            st.sb = 1.0;
        }
        if (st.ic - st.ib > n + 1) {
            throw SweepError(SweepErrorKind::NoAdmissibleStep, "anchored search wrapped around the polygon");
        }
    }
    if (st.sc >= 1.0) {
        ++st.ic;
        st.sc = 0.0;
    }
    return st;
}

AnchoredTriangle anchored_triangle(const ConvexPolygon& poly, const Direction& u) {
    const AnchoredState st = anchored_search(poly, u);
    AnchoredTriangle out;
    out.a_index = poly.wrap(st.ia);
    out.b = canonical_edge_point(poly, st.ib, st.sb);
    out.c = canonical_edge_point(poly, st.ic, st.sc);
    out.u = u;
    out.area = triangle_area(poly.vertex(st.ia), edge_point_coords(poly, out.b), edge_point_coords(poly, out.c));
    out.iterations = st.iterations;
    return out;
}

// Fractions within kFracTol of an endpoint count as that vertex.
Vec2 forward_tangent(const ConvexPolygon& poly, EdgePoint x) {
    const auto i = static_cast<long long>(x.edge);
    return x.frac >= 1.0 - kFracTol ? poly.edge(i + 1) : poly.edge(i);
}

Vec2 backward_tangent(const ConvexPolygon& poly, EdgePoint x) {
    const auto i = static_cast<long long>(x.edge);
    return x.frac <= kFracTol ? poly.edge(i - 1) : poly.edge(i);
}

namespace {

double one_sided_q(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const Vec2 d = c - b;
    const bool b_parallel = std::abs(wedge(v, d)) <= kRelTol * norm(v) * norm(d);
    const bool c_parallel = std::abs(wedge(w, d)) <= kRelTol * norm(w) * norm(d);
    if (b_parallel && c_parallel) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (b_parallel) {
        return -std::numeric_limits<double>::infinity();
    }
    if (c_parallel) {
        return std::numeric_limits<double>::infinity();
    }
    return calculate_Q(a, b, v, c, w);
}

}  // namespace

bool AnchoredCertificate::holds() const {
    const double tol = kRelTol * scale;
    return (std::isnan(q_minus_plus) || q_minus_plus >= -tol) && (std::isnan(q_plus_minus) || q_plus_minus <= tol);
}

AnchoredCertificate anchored_certificate(const ConvexPolygon& poly, std::size_t a_index, EdgePoint b, EdgePoint c) {
    const Point2 a = poly.vertex(static_cast<long long>(a_index));
    const Point2 pb = edge_point_coords(poly, b);
    const Point2 pc = edge_point_coords(poly, c);
    const Vec2 bm = backward_tangent(poly, b);
    const Vec2 bp = forward_tangent(poly, b);
    const Vec2 cm = backward_tangent(poly, c);
    const Vec2 cp = forward_tangent(poly, c);
    AnchoredCertificate cert;
    cert.q_minus_plus = one_sided_q(a, pb, bm, pc, cp);
    cert.q_plus_minus = one_sided_q(a, pb, bp, pc, cm);
    cert.scale = std::max(q_scale(a, pb, bm, pc, cp), q_scale(a, pb, bp, pc, cm));
    return cert;
}

}  // namespace mit
