#pragma once

#include <optional>

#include "mit/geom_core.hpp"

// Closed forms governing how a candidate-anchored triangle abc evolves while
// b slides along v and c slides along w. Edge vectors are passed unnormalized
// (p_{i+1} − p_i), so every step length is a fraction of the respective edge.

namespace mit {

struct CoefficientTriple {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Step lengths along v (tb) and w (tc). An empty component means the
/// corresponding event never happens along these edges.
struct StepPair {
    std::optional<double> tb;
    std::optional<double> tc;
};

/// Has the sign of d(area)/dh when the chord bc is pushed outward along its
/// normal by h·|c − b| while b and c ride the lines through them along v and w.
double calculate_Q(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);

/// Magnitude reference for calculate_Q: |d|·(|d| + |b − a| + |c − a|)·|v|·|w|
/// with d = c − b. Q is treated as zero when |Q| <= kRelTol * q_scale.
double q_scale(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);

/// Numerator of the stationary chord displacement for the u-perpendicular
/// chord family through b (line along v) and c (line along w).
double calculate_tq(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w, const Direction& u);

/// Signed displacement along u of the chord position that maximizes the area,
/// i.e. calculate_tq / (2 v∧w). Empty when v∧w vanishes.
std::optional<double> stationary_chord_offset(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w, const Direction& u);

/// t with Q(a, b + t·v, c, ·) = 0.
std::optional<double> calculate_tb4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);
/// t with Q(a, b, c + t·w, ·) = 0.
std::optional<double> calculate_tc4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);
StepPair calculate_tb4_tc4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);

/// Coefficients of the relation beta·tb − gamma·tc + alpha·tb·tc = 0 that keeps
/// Q(a, b + tb·v, c + tc·w) at zero when Q(a, b, c) = 0.
CoefficientTriple calculate_alpha_beta_gamma(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w);

/// Steps along the Q = 0 relation at which (c' − b') becomes parallel to e.
StepPair calculate_tb3_tc3(Point2 a, Vec2 e, Point2 b, Vec2 v, Point2 c, Vec2 w);

}  // namespace mit
