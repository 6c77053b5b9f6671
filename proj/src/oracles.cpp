#include "mit/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace mit {

MaxResult brute_force_max_triangle(const ConvexPolygon& poly) {
    const std::size_t n = poly.size();
    if (n > kBruteForceLimit) {
        throw OracleError(OracleErrorKind::TooLarge, "brute force limited to " + std::to_string(kBruteForceLimit) +
                                                         " vertices, got " + std::to_string(n));
    }
    const auto v = poly.vertices();
    MaxResult best;
    best.area_max = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const double area = triangle_area(v[i], v[j], v[k]);
                ++best.iterations;
                if (area > best.area_max) {
                    best.area_max = area;
                    best.ia_max = i;
                    best.ib_max = j;
                    best.ic_max = k;
                }
            }
        }
    }
    return best;
}

namespace {

// One boundary chain between the u-extreme vertices, as (y, z) samples with
// y nondecreasing. edge[k] is the polygon edge joining samples k and k+1 and
// reversed[k] tells whether that edge runs against the chain.
struct Chain {
    std::vector<double> y;
    std::vector<double> z;
    std::vector<long long> edge;
    std::vector<bool> reversed;
};

// Locates the chain segment covering the interval starting at lo, from a cursor
// that only moves forward.
std::size_t covering_segment(const Chain& ch, std::size_t cursor, double lo) {
    while (cursor + 1 < ch.y.size() - 1 && (ch.y[cursor + 1] <= lo || ch.y[cursor + 1] <= ch.y[cursor])) {
        ++cursor;
    }
    return cursor;
}

double chain_z(const Chain& ch, std::size_t seg, double y) {
    const double y0 = ch.y[seg];
    const double y1 = ch.y[seg + 1];
    if (y1 <= y0) {
        return ch.z[seg + 1];
    }
    const double t = std::clamp((y - y0) / (y1 - y0), 0.0, 1.0);
    return ch.z[seg] * (1.0 - t) + ch.z[seg + 1] * t;
}

struct Profile {
    ChordProfile profile;
    Chain lower;  // b side: z = −g(y)
    Chain upper;  // c side: z = f(y)
    std::vector<std::size_t> lower_seg;
    std::vector<std::size_t> upper_seg;
    std::size_t a_index = 0;
};

Profile build(const ConvexPolygon& poly, const Direction& u) {
    const Vec2 uv = u.vec();
    const Vec2 vv = u.perp();
    auto height = [&](long long i) { return dot(uv, poly.vertex(i) - Point2{}); };
    auto across = [&](long long i) { return dot(vv, poly.vertex(i) - Point2{}); };

    Profile out;
    const auto lo = static_cast<long long>(extreme_vertex(poly, u, Extreme::Min));
    const auto hi = static_cast<long long>(extreme_vertex(poly, u, Extreme::Max));
    out.a_index = static_cast<std::size_t>(lo);

    // Lower chain runs counter-clockwise from lo to hi.
    const long long lower_len = static_cast<long long>(poly.wrap(hi - lo));
    for (long long k = 0; k <= lower_len; ++k) {
        out.lower.y.push_back(height(lo + k));
        out.lower.z.push_back(across(lo + k));
        if (k < lower_len) {
            out.lower.edge.push_back(static_cast<long long>(poly.wrap(lo + k)));
            out.lower.reversed.push_back(false);
        }
    }
    // Upper chain runs counter-clockwise from hi to lo; store it reversed so y ascends.
    const long long upper_len = static_cast<long long>(poly.wrap(lo - hi));
    for (long long k = upper_len; k >= 0; --k) {
        out.upper.y.push_back(height(hi + k));
        out.upper.z.push_back(across(hi + k));
        if (k > 0) {
            out.upper.edge.push_back(static_cast<long long>(poly.wrap(hi + k - 1)));
            out.upper.reversed.push_back(true);
        }
    }
    for (Chain* ch : {&out.lower, &out.upper}) {
        for (std::size_t k = 1; k < ch->y.size(); ++k) {
            ch->y[k] = std::max(ch->y[k], ch->y[k - 1]);
        }
    }

    ChordProfile& prof = out.profile;
    prof.direction = u;
    prof.y_min = std::min(out.lower.y.front(), out.upper.y.front());
    prof.y_max = std::max(out.lower.y.back(), out.upper.y.back());
    out.lower.y.front() = out.upper.y.front() = prof.y_min;
    out.lower.y.back() = out.upper.y.back() = prof.y_max;

    std::vector<double> ys;
    ys.reserve(out.lower.y.size() + out.upper.y.size());
    std::merge(out.lower.y.begin(), out.lower.y.end(), out.upper.y.begin(), out.upper.y.end(), std::back_inserter(ys));
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    prof.breakpoints = ys;

    std::size_t lc = 0;
    std::size_t uc = 0;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        const double y0 = ys[k];
        const double y1 = ys[k + 1];
        lc = covering_segment(out.lower, lc, y0);
        uc = covering_segment(out.upper, uc, y0);
        const double w0 = chain_z(out.upper, uc, y0) - chain_z(out.lower, lc, y0);
        const double w1 = chain_z(out.upper, uc, y1) - chain_z(out.lower, lc, y1);
        prof.pieces.push_back({y0, y1, w0, w1});
        out.lower_seg.push_back(lc);
        out.upper_seg.push_back(uc);
    }
    return out;
}

EdgePoint chain_edge_point(const ConvexPolygon& poly, const Chain& ch, std::size_t seg, double y) {
    const double y0 = ch.y[seg];
    const double y1 = ch.y[seg + 1];
    double t = y1 > y0 ? std::clamp((y - y0) / (y1 - y0), 0.0, 1.0) : 1.0;
    if (ch.reversed[seg]) {
        t = 1.0 - t;
    }
    return canonical_edge_point(poly, ch.edge[seg], t);
}

}  // namespace

double ChordProfile::width(double y) const {
    if (pieces.empty()) {
        return 0.0;
    }
    y = std::clamp(y, y_min, y_max);
    auto it = std::upper_bound(pieces.begin(), pieces.end(), y,
                               [](double value, const WidthPiece& p) { return value < p.y1; });
    if (it == pieces.end()) {
        --it;
    }
    const WidthPiece& p = *it;
    if (p.y1 <= p.y0) {
        return p.w1;
    }
    const double t = (y - p.y0) / (p.y1 - p.y0);
    return p.w0 * (1.0 - t) + p.w1 * t;
}

ChordProfile build_chord_profile(const ConvexPolygon& poly, const Direction& u) { return build(poly, u).profile; }

AnchoredTriangle anchored_oracle(const ConvexPolygon& poly, const Direction& u) {
    const Profile pr = build(poly, u);
    const ChordProfile& prof = pr.profile;

    double best_area = -1.0;
    double best_y = prof.y_max;
    std::size_t best_piece = prof.pieces.size() - 1;
    auto consider = [&](std::size_t piece, double y) {
        const WidthPiece& p = prof.pieces[piece];
        const double t = p.y1 > p.y0 ? (y - p.y0) / (p.y1 - p.y0) : 1.0;
        const double w = p.w0 * (1.0 - t) + p.w1 * t;
        const double area = 0.5 * (y - prof.y_min) * w;
        if (area >= best_area) {
            best_area = area;
            best_y = y;
            best_piece = piece;
        }
    };
    for (std::size_t k = 0; k < prof.pieces.size(); ++k) {
        const WidthPiece& p = prof.pieces[k];
        consider(k, p.y0);
        // d/dy [(y − y_min)(w0 + m(y − y0))] = 0
        const double m = (p.w1 - p.w0) / (p.y1 - p.y0);
        if (m < 0.0) {
            const double y_star = (m * (p.y0 + prof.y_min) - p.w0) / (2.0 * m);
            if (y_star > p.y0 && y_star < p.y1) {
                consider(k, y_star);
            }
        }
        consider(k, p.y1);
    }

    AnchoredTriangle out;
    out.a_index = pr.a_index;
    out.u = u;
    out.b = chain_edge_point(poly, pr.lower, pr.lower_seg[best_piece], best_y);
    out.c = chain_edge_point(poly, pr.upper, pr.upper_seg[best_piece], best_y);
    out.area = triangle_area(poly.vertex(static_cast<long long>(out.a_index)), edge_point_coords(poly, out.b),
                             edge_point_coords(poly, out.c));
    return out;
}

double finite_difference_area_derivative(Point2 a, Point2 b, Point2 c, Vec2 v, Vec2 w, double h) {
    const Vec2 d = c - b;
    const double len = norm(d);
    // Outer normal of the chord: d rotated clockwise.
    const Vec2 u{d.dy / len, -d.dx / len};
    const double uv = dot(u, v);
    const double uw = dot(u, w);
    if (std::abs(uv) <= kRelTol * norm(v) || std::abs(uw) <= kRelTol * norm(w)) {
        throw OracleError(OracleErrorKind::ParallelEdge, "tangent line parallel to the chord");
    }
    auto area_at = [&](double shift) {
        const double offset = shift * len;
        const Point2 b2 = b + (offset / uv) * v;
        const Point2 c2 = c + (offset / uw) * w;
        return triangle_area(a, b2, c2);
    };
    return (area_at(h) - area_at(-h)) / (2.0 * h);
}

}  // namespace mit
