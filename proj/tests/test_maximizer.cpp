#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mit/evolution_formulas.hpp"
#include "mit/maximizer.hpp"
#include "mit/oracles.hpp"
#include "test_support.hpp"

using namespace mit;
using mit::testing::square_polygon;

namespace {

double rel_err(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

// Violations of the trace contract: monotone unwrapped indices and a full
// turn of a. Returns a description of the first problem, empty if none.
std::string trace_problem(const ConvexPolygon& p, const std::vector<TriangleState>& trace) {
    if (trace.empty()) {
        return "empty trace";
    }
    const auto n = static_cast<long long>(p.size());
    for (std::size_t k = 1; k < trace.size(); ++k) {
        const TriangleState& s = trace[k - 1];
        const TriangleState& t = trace[k];
        if (t.ia < s.ia || t.ib < s.ib || t.ic < s.ic) {
            return "index decreased at step " + std::to_string(k);
        }
        if (t.ib == s.ib && t.sb < s.sb) {
            return "b moved backwards at step " + std::to_string(k);
        }
        if (t.ic == s.ic && t.sc < s.sc) {
            return "c moved backwards at step " + std::to_string(k);
        }
    }
    if (trace.back().ia != trace.front().ia + n) {
        return "a ended at " + std::to_string(trace.back().ia) + ", expected " + std::to_string(trace.front().ia + n);
    }
    return {};
}

}  // namespace

TEST(LargestTriangle, Square) {
    const MaxResult r = largest_inscribed_triangle(square_polygon());
    EXPECT_DOUBLE_EQ(r.area_max, 0.5);
}

TEST(LargestTriangle, HexagonAlternatingVertices) {
    const MaxResult r = largest_inscribed_triangle(mit::testing::regular(6));
    EXPECT_NEAR(r.area_max, 3 * std::sqrt(3.0) / 4, 1e-12);
    std::array<std::size_t, 3> idx{r.ia_max, r.ib_max, r.ic_max};
    std::sort(idx.begin(), idx.end());
    EXPECT_TRUE(idx == (std::array<std::size_t, 3>{0, 2, 4}) || idx == (std::array<std::size_t, 3>{1, 3, 5}));
}

TEST(LargestTriangle, TriangleIsItself) {
    const ConvexPolygon tri = validate_polygon({{0, 0}, {4, 0}, {0, 3}});
    EXPECT_DOUBLE_EQ(largest_inscribed_triangle(tri).area_max, 6.0);
}

TEST(LargestTriangle, DodecagonMatchesBruteForce) {
    const ConvexPolygon p = mit::testing::regular(12);
    const double ref = brute_force_max_triangle(p).area_max;
    // Equilateral triangle on the unit circle.
    EXPECT_NEAR(ref, 3 * std::sqrt(3.0) / 4, 1e-12);
    EXPECT_NEAR(largest_inscribed_triangle(p).area_max, ref, 1e-12);
}

TEST(LargestTriangle, AreaMatchesReportedVertices) {
    UniformSource rng(51);
    for (int i = 0; i < 50; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 60, 11000 + i);
        const MaxResult r = largest_inscribed_triangle(p);
        EXPECT_EQ(r.area_max, triangle_area(p.vertex(static_cast<long long>(r.ia_max)),
                                            p.vertex(static_cast<long long>(r.ib_max)),
                                            p.vertex(static_cast<long long>(r.ic_max))));
    }
}

TEST(LargestTriangle, MatchesBruteForceOnRandomPolygons) {
    UniformSource rng(52);
    for (int i = 0; i < 400; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 100, 12000 + i);
        const MaxResult r = largest_inscribed_triangle(p, true);
        const double ref = brute_force_max_triangle(p).area_max;
        ASSERT_LE(rel_err(r.area_max, ref), 1e-9) << "case " << i << " n " << p.size();
        EXPECT_LE(r.iterations, kIterationCapFactor * p.size());
        EXPECT_EQ(trace_problem(p, r.trace), "") << "case " << i;
    }
}

TEST(LargestTriangle, RegularPolygonsOfManySizes) {
    for (std::size_t n : {3u, 4u, 5u, 7u, 8u, 16u, 33u, 100u, 257u, 1000u}) {
        const ConvexPolygon p = mit::testing::regular(n);
        const MaxResult r = largest_inscribed_triangle(p, true);
        EXPECT_LE(rel_err(r.area_max, brute_force_max_triangle(p).area_max), 1e-12) << "n " << n;
        EXPECT_EQ(trace_problem(p, r.trace), "") << "n " << n;
    }
}

TEST(LargestTriangle, ObserverSeesTheTrace) {
    const ConvexPolygon p = mit::testing::regular(9);
    const MaxResult stored = largest_inscribed_triangle(p, true);
    std::vector<TriangleState> seen;
    const MaxResult streamed = largest_inscribed_triangle(p, [&](const TriangleState& s) { seen.push_back(s); });
    EXPECT_EQ(seen, stored.trace);
    EXPECT_EQ(streamed.area_max, stored.area_max);
    EXPECT_EQ(streamed.iterations, stored.iterations);
    EXPECT_TRUE(streamed.trace.empty());
}

TEST(Sweep, SnapshotsAreCandidateAnchored) {
    UniformSource rng(53);
    for (int i = 0; i < 100; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 50, 13000 + i);
        const MaxResult r = largest_inscribed_triangle(p, true);
        const double d = p.diameter();
        for (const TriangleState& s : r.trace) {
            const Vec2 chord = state_c(p, s) - state_b(p, s);
            ASSERT_GT(norm(chord), 0.0);
            // Outer normal of the chord; a must minimize it over the polygon.
            const Vec2 u{chord.dy / norm(chord), -chord.dx / norm(chord)};
            const Point2 a = p.vertex(s.ia);
            EXPECT_GE(dot(u, p.vertex(s.ia + 1) - a), -1e-9 * d) << "case " << i;
            EXPECT_GE(dot(u, p.vertex(s.ia - 1) - a), -1e-9 * d) << "case " << i;
            EXPECT_LE(s.ia, s.ib);
            EXPECT_LE(s.ib, s.ic);
            EXPECT_LE(s.ic, s.ia + static_cast<long long>(p.size()));
        }
    }
}

TEST(Sweep, VertexTriplesAreAnchored) {
    UniformSource rng(54);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 40, 14000 + i);
        const MaxResult r = largest_inscribed_triangle(p, true);
        for (const TriangleState& s : r.trace) {
            if (s.sb != 0.0 || s.sc != 0.0 || a_advance_due(p, s)) {
                continue;
            }
            const Vec2 chord = p.vertex(s.ic) - p.vertex(s.ib);
            const Direction u = Direction::from_components(chord.dy, -chord.dx);
            const AnchoredTriangle t = anchored_triangle(p, u);
            const double tol = 1e-9 * p.diameter();
            EXPECT_EQ(t.a_index, p.wrap(s.ia)) << "case " << i;
            EXPECT_LE(norm(edge_point_coords(p, t.b) - p.vertex(s.ib)), tol) << "case " << i;
            EXPECT_LE(norm(edge_point_coords(p, t.c) - p.vertex(s.ic)), tol) << "case " << i;
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Sweep, QZeroFlagNeverDropsTwiceInARow) {
    UniformSource rng(55);
    for (int i = 0; i < 100; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 60, 15000 + i);
        const MaxResult r = largest_inscribed_triangle(p, true);
        for (std::size_t k = 2; k < r.trace.size(); ++k) {
            const bool drop1 = r.trace[k - 2].q_was_zero && !r.trace[k - 1].q_was_zero;
            const bool drop2 = r.trace[k - 1].q_was_zero && !r.trace[k].q_was_zero;
            EXPECT_FALSE(drop1 && drop2) << "case " << i << " step " << k;
        }
    }
}

TEST(Sweep, InitialStateIsAnchoredToX) {
    const ConvexPolygon sq = square_polygon();
    const TriangleState s = initial_sweep_state(sq);
    EXPECT_EQ(s.ia, 0);
    EXPECT_EQ(state_b(sq, s), (Point2{1, 0}));
    EXPECT_EQ(state_c(sq, s), (Point2{1, 1}));
    EXPECT_FALSE(s.q_was_zero);
}

TEST(SweepStep, IndicesNeverDecrease) {
    UniformSource rng(56);
    for (int i = 0; i < 50; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 30, 16000 + i);
        TriangleState s = initial_sweep_state(p);
        for (int k = 0; k < 2; ++k) {
            const TriangleState t = sweep_step(s, p);
            EXPECT_GE(t.ia, s.ia);
            EXPECT_GE(t.ib, s.ib);
            EXPECT_GE(t.ic, s.ic);
            s = t;
        }
    }
}

TEST(SweepStep, SquareNegativeQMovesOnlyC) {
    const ConvexPolygon sq = square_polygon();
    // a = (0,0), b = (1,0), c = (0.5,1) on edge 2; chord normal is (2,1)/√5.
    TriangleState s;
    s.ia = 0;
    s.ib = 1;
    s.sb = 0.0;
    s.ic = 2;
    s.sc = 0.5;
    const Point2 b = state_b(sq, s);
    const Point2 c = state_c(sq, s);
    ASSERT_LT(calculate_Q(sq.vertex(0), b, sq.edge(1), c, sq.edge(2)), 0.0);
    const TriangleState t = sweep_step(s, sq);
    EXPECT_EQ(t.ib, s.ib);
    EXPECT_EQ(t.sb, s.sb);
    EXPECT_TRUE(t.ic > s.ic || t.sc > s.sc);
}

TEST(SweepStep, HexagonZeroQMovesBothTogether) {
    const ConvexPolygon hex = mit::testing::regular(6);
    // From the vertex triple {0, 2, 4}, c slides alone until Q vanishes a third
    // of the way along its edge; from there b and c travel together.
    TriangleState s;
    s.ia = 0;
    s.ib = 2;
    s.sb = 0.0;
    s.ic = 4;
    s.sc = 1.0 / 3.0;
    const Point2 a = hex.vertex(0);
    const Vec2 eb = hex.edge(2);
    const Vec2 ec = hex.edge(4);
    ASSERT_LE(std::abs(calculate_Q(a, state_b(hex, s), eb, state_c(hex, s), ec)), 1e-12);
    s.q_was_zero = true;

    const TriangleState t = sweep_step(s, hex);
    EXPECT_EQ(t.ia, 0);
    EXPECT_EQ(t.ib, 2);
    EXPECT_EQ(t.ic, 4);
    const double tb = t.sb - s.sb;
    const double tc = t.sc - s.sc;
    EXPECT_GT(tb, 0.0);
    EXPECT_GT(tc, 0.0);
    const CoefficientTriple k = calculate_alpha_beta_gamma(a, state_b(hex, s), eb, state_c(hex, s), ec);
    EXPECT_NEAR(k.beta * tb - k.gamma * tc + k.alpha * tb * tc, 0.0, 1e-12);

    // The new chord is the anchored one for its own direction.
    const Vec2 chord = state_c(hex, t) - state_b(hex, t);
    const AnchoredTriangle o = anchored_oracle(hex, Direction::from_components(chord.dy, -chord.dx));
    EXPECT_NEAR(norm(edge_point_coords(hex, o.b) - state_b(hex, t)), 0.0, 1e-9);
    EXPECT_NEAR(norm(edge_point_coords(hex, o.c) - state_c(hex, t)), 0.0, 1e-9);
}

TEST(SweepStep, HexagonVertexTripleHasNegativeQ) {
    const ConvexPolygon hex = mit::testing::regular(6);
    TriangleState s;
    s.ia = 0;
    s.ib = 2;
    s.ic = 4;
    ASSERT_LT(calculate_Q(hex.vertex(0), hex.vertex(2), hex.edge(2), hex.vertex(4), hex.edge(4)), 0.0);
    const TriangleState t = sweep_step(s, hex);
    EXPECT_EQ(t.sb, 0.0);
    EXPECT_NEAR(t.sc, 1.0 / 3.0, 1e-12);
    EXPECT_TRUE(t.q_was_zero);
}
