#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mit/oracles.hpp"
#include "test_support.hpp"

using namespace mit;
using mit::testing::square_polygon;

namespace {

// Length of the slice {p in P : u·p = y}, by clipping the line against every edge.
double slice_width(const ConvexPolygon& p, const Direction& u, double y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (long long i = 0; i < static_cast<long long>(p.size()); ++i) {
        const Point2 s = p.vertex(i);
        const Point2 e = p.vertex(i + 1);
        const double ys = dot(u.vec(), s - Point2{});
        const double ye = dot(u.vec(), e - Point2{});
        if ((ys - y) * (ye - y) > 0 || ys == ye) {
            continue;
        }
        const double t = (y - ys) / (ye - ys);
        const double z = dot(u.perp(), (s + t * (e - s)) - Point2{});
        lo = std::min(lo, z);
        hi = std::max(hi, z);
    }
    return hi > lo ? hi - lo : 0.0;
}

std::vector<Point2> rotated(std::span<const Point2> pts, std::size_t k) {
    std::vector<Point2> out(pts.begin(), pts.end());
    std::rotate(out.begin(), out.begin() + static_cast<long>(k), out.end());
    return out;
}

}  // namespace

TEST(BruteForce, Fixtures) {
    EXPECT_DOUBLE_EQ(brute_force_max_triangle(square_polygon()).area_max, 0.5);
    EXPECT_NEAR(brute_force_max_triangle(mit::testing::regular(6)).area_max, 3 * std::sqrt(3.0) / 4, 1e-15);
    const MaxResult tri = brute_force_max_triangle(validate_polygon({{0, 0}, {4, 0}, {0, 3}}));
    EXPECT_DOUBLE_EQ(tri.area_max, 6.0);
    EXPECT_EQ(tri.iterations, 1u);
}

TEST(BruteForce, LexicographicTieBreak) {
    const MaxResult r = brute_force_max_triangle(square_polygon());
    EXPECT_EQ(r.ia_max, 0u);
    EXPECT_EQ(r.ib_max, 1u);
    EXPECT_EQ(r.ic_max, 2u);
}

TEST(BruteForce, RejectsLargeInput) {
    try {
        brute_force_max_triangle(mit::testing::regular(kBruteForceLimit + 1));
        FAIL();
    } catch (const OracleError& e) {
        EXPECT_EQ(e.kind(), OracleErrorKind::TooLarge);
    }
}

TEST(BruteForce, RotationStable) {
    UniformSource rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto pts = hull_of_random(30, 7000 + i);
        const MaxResult r = brute_force_max_triangle(validate_polygon(pts));
        const std::size_t n = pts.size();
        const auto k = static_cast<std::size_t>(rng.next() * static_cast<double>(n));
        const MaxResult s = brute_force_max_triangle(validate_polygon(rotated(pts, k)));
        EXPECT_EQ(r.area_max, s.area_max);
        std::array<std::size_t, 3> expected{(r.ia_max + n - k) % n, (r.ib_max + n - k) % n, (r.ic_max + n - k) % n};
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(expected, (std::array<std::size_t, 3>{s.ia_max, s.ib_max, s.ic_max}));
    }
}

TEST(ChordProfile, SquareWidthIsConstant) {
    const ChordProfile prof = build_chord_profile(square_polygon(), Direction::from_components(1, 0));
    EXPECT_EQ(prof.y_min, 0.0);
    EXPECT_EQ(prof.y_max, 1.0);
    EXPECT_DOUBLE_EQ(prof.width(0.0), 1.0);
    EXPECT_DOUBLE_EQ(prof.width(0.3), 1.0);
    EXPECT_DOUBLE_EQ(prof.width(1.0), 1.0);
}

TEST(ChordProfile, MatchesSlicesAndIsConcave) {
    UniformSource rng(42);
    for (int i = 0; i < 200; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 40, 8000 + i);
        const Direction u = Direction::from_angle(rng.next(0, 2 * std::numbers::pi));
        const ChordProfile prof = build_chord_profile(p, u);
        const double d = p.diameter();
        ASSERT_TRUE(std::is_sorted(prof.breakpoints.begin(), prof.breakpoints.end()));
        EXPECT_EQ(std::adjacent_find(prof.breakpoints.begin(), prof.breakpoints.end()), prof.breakpoints.end());
        EXPECT_NEAR(prof.width(prof.y_min), 0.0, 1e-9 * d);
        EXPECT_NEAR(prof.width(prof.y_max), 0.0, 1e-9 * d);
        for (int j = 1; j < 20; ++j) {
            const double y = prof.y_min + (prof.y_max - prof.y_min) * j / 20.0;
            EXPECT_NEAR(prof.width(y), slice_width(p, u, y), 1e-9 * d);
        }
        for (int j = 1; j + 1 < 50; ++j) {
            const double h = (prof.y_max - prof.y_min) / 50.0;
            const double y = prof.y_min + j * h;
            EXPECT_GE(prof.width(y), 0.5 * (prof.width(y - h) + prof.width(y + h)) - 1e-9 * d);
        }
    }
}

TEST(AnchoredOracle, SquareRight) {
    const ConvexPolygon sq = square_polygon();
    const AnchoredTriangle t = anchored_oracle(sq, Direction::from_components(1, 0));
    EXPECT_DOUBLE_EQ(t.area, 0.5);
    EXPECT_DOUBLE_EQ(edge_point_coords(sq, t.b).x, 1.0);
    EXPECT_DOUBLE_EQ(edge_point_coords(sq, t.c).x, 1.0);
}

TEST(AnchoredOracle, FullTurnIsSameDirection) {
    UniformSource rng(43);
    for (int i = 0; i < 50; ++i) {
        const ConvexPolygon p = mit::testing::random_polygon(rng, 30, 9000 + i);
        const double theta = rng.next(0, 2 * std::numbers::pi);
        const AnchoredTriangle t1 = anchored_oracle(p, Direction::from_angle(theta));
        const AnchoredTriangle t2 = anchored_oracle(p, Direction::from_angle(theta + 2 * std::numbers::pi));
        EXPECT_NEAR(t1.area, t2.area, 1e-12);
        EXPECT_EQ(t1.a_index, t2.a_index);
    }
}

TEST(AnchoredOracle, DominatesGridAndIsDominatedByBruteForce) {
    UniformSource rng(44);
    const ConvexPolygon pent = validate_polygon(hull_of_random(5, 99));
    const double best = brute_force_max_triangle(pent).area_max;
    for (int i = 0; i < 100; ++i) {
        const Direction u = Direction::from_angle(rng.next(0, 2 * std::numbers::pi));
        const AnchoredTriangle t = anchored_oracle(pent, u);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const Point2& q : pent.vertices()) {
            lo = std::min(lo, dot(u.vec(), q - Point2{}));
            hi = std::max(hi, dot(u.vec(), q - Point2{}));
        }
        double grid = 0.0;
        for (int j = 0; j <= 1000; ++j) {
            const double y = lo + (hi - lo) * j / 1000.0;
            grid = std::max(grid, 0.5 * (y - lo) * slice_width(pent, u, y));
        }
        EXPECT_GE(t.area, grid - 1e-12);
        EXPECT_LE(t.area, best + 1e-12);
    }
}

TEST(FiniteDifference, FixtureIsNegative) {
    EXPECT_LT(finite_difference_area_derivative({0, 0}, {2, -1}, {2, 1}, {1, 1}, {-1, 1}, 1e-6), 0.0);
}

TEST(FiniteDifference, MirrorConfigurationIsStationary) {
    // area(h) = (1 + 2h)(1 − 2h), even in h
    EXPECT_NEAR(finite_difference_area_derivative({0, 0}, {1, -1}, {1, 1}, {1, 1}, {1, -1}, 1e-6), 0.0, 1e-9);
}

TEST(FiniteDifference, RichardsonConsistent) {
    UniformSource rng(45);
    for (int i = 0; i < 100; ++i) {
        const Point2 a{rng.next(-1, 0), rng.next(-1, 1)};
        const Point2 b{1, rng.next(-1, -0.2)};
        const Point2 c{1, rng.next(0.2, 1)};
        const Vec2 v{rng.next(0.2, 1), rng.next(-1, 1)};
        const Vec2 w{rng.next(-1, -0.2), rng.next(-1, 1)};
        const double d1 = finite_difference_area_derivative(a, b, c, v, w, 1e-4);
        const double d2 = finite_difference_area_derivative(a, b, c, v, w, 5e-5);
        EXPECT_NEAR((4 * d2 - d1) / 3, d2, 1e-6);
    }
}

TEST(FiniteDifference, ParallelTangentThrows) {
    EXPECT_THROW(finite_difference_area_derivative({0, 0}, {1, -1}, {1, 1}, {0, 1}, {1, 1}, 1e-6), OracleError);
}
