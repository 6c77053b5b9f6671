#include "mit/evolution_formulas.hpp"

#include <cmath>

namespace mit {

namespace {

// The formulas depend on coordinate differences only; evaluating them in a
// frame centred on b avoids cancellation for far-from-origin inputs.
struct Frame {
    double a1, a2, b1, b2, c1, c2;
};

Frame local_frame(Point2 a, Point2 b, Point2 c) {
    return {a.x - b.x, a.y - b.y, 0.0, 0.0, c.x - b.x, c.y - b.y};
}

bool negligible(double value, double reference) { return std::abs(value) <= kRelTol * reference; }

// Shared numerator of tb4 and tc4.
double q_root_numerator(const Frame& f, Vec2 v, Vec2 w) {
    const auto [a1, a2, b1, b2, c1, c2] = f;
    const double v1 = v.dx, v2 = v.dy, w1 = w.dx, w2 = w.dy;
    return v1 * w1 * (b2 - c2) * (b2 - c2) + v2 * w2 * (b1 - c1) * (b1 - c1) +
           v1 * w2 * ((a1 - b1) * b2 + (c1 - b1) * a2 + (2 * b1 - a1 - c1) * c2) +
           v2 * w1 * ((b1 - c1) * a2 - (c1 - a1) * c2 + (2 * c1 - a1 - b1) * b2);
}

}  // namespace

double calculate_Q(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const auto [a1, a2, b1, b2, c1, c2] = local_frame(a, b, c);
    const double v1 = v.dx, v2 = v.dy, w1 = w.dx, w2 = w.dy;
    return (c2 - b2) * ((b2 - c2) * v1 * w1 - (a1 - c1) * v2 * w1 + (a1 - b1) * v1 * w2) +
           (c1 - b1) * ((b1 - c1) * v2 * w2 - (a2 - c2) * v1 * w2 + (a2 - b2) * v2 * w1);
}

double q_scale(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const double d = norm(c - b);
    return d * (d + norm(b - a) + norm(c - a)) * norm(v) * norm(w);
}

double calculate_tq(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w, const Direction& u) {
    const auto [a1, a2, b1, b2, c1, c2] = local_frame(a, b, c);
    const double v1 = v.dx, v2 = v.dy, w1 = w.dx, w2 = w.dy;
    const double u1 = u.ux(), u2 = u.uy();
    return u1 * ((b2 - c2) * v1 * w1 + (c1 - a1) * v2 * w1 + (a1 - b1) * v1 * w2) -
           u2 * ((b1 - c1) * v2 * w2 + (c2 - a2) * v1 * w2 + (a2 - b2) * v2 * w1);
}

std::optional<double> stationary_chord_offset(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w, const Direction& u) {
    const double vw = wedge(v, w);
    if (negligible(vw, norm(v) * norm(w))) {
        return std::nullopt;
    }
    return calculate_tq(a, b, v, c, w, u) / (2.0 * vw);
}

std::optional<double> calculate_tb4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const Frame f = local_frame(a, b, c);
    const double vw = wedge(v, w);
    // v1(a2 + b2 − 2c2) − v2(a1 + b1 − 2c1) = v ∧ (a + b − 2c)
    const Vec2 m{f.a1 + f.b1 - 2 * f.c1, f.a2 + f.b2 - 2 * f.c2};
    const double vm = wedge(v, m);
    if (negligible(vw, norm(v) * norm(w)) || negligible(vm, norm(v) * norm(m))) {
        return std::nullopt;
    }
    return q_root_numerator(f, v, w) / (vw * vm);
}

std::optional<double> calculate_tc4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const Frame f = local_frame(a, b, c);
    const double vw = wedge(v, w);
    // w1(a2 + c2 − 2b2) − w2(a1 + c1 − 2b1) = w ∧ (a + c − 2b)
    const Vec2 m{f.a1 + f.c1 - 2 * f.b1, f.a2 + f.c2 - 2 * f.b2};
    const double wm = wedge(w, m);
    if (negligible(vw, norm(v) * norm(w)) || negligible(wm, norm(w) * norm(m))) {
        return std::nullopt;
    }
    return -q_root_numerator(f, v, w) / (vw * wm);
}

StepPair calculate_tb4_tc4(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    return {calculate_tb4(a, b, v, c, w), calculate_tc4(a, b, v, c, w)};
}

CoefficientTriple calculate_alpha_beta_gamma(Point2 a, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const auto [a1, a2, b1, b2, c1, c2] = local_frame(a, b, c);
    const double v1 = v.dx, v2 = v.dy, w1 = w.dx, w2 = w.dy;
    return {
        2 * (v1 * w2 - w1 * v2),
        v1 * (2 * c2 - a2 - b2) - v2 * (2 * c1 - b1 - a1),
        w1 * (2 * b2 - a2 - c2) - w2 * (2 * b1 - c1 - a1),
    };
}

StepPair calculate_tb3_tc3(Point2 a, Vec2 e, Point2 b, Vec2 v, Point2 c, Vec2 w) {
    const auto [a1, a2, b1, b2, c1, c2] = local_frame(a, b, c);
    const double v1 = v.dx, v2 = v.dy, w1 = w.dx, w2 = w.dy, e1 = e.dx, e2 = e.dy;
    const double vw = v1 * w2 - w1 * v2;
    const double ev = e2 * v1 - e1 * v2;
    const double ew = e2 * w1 - e1 * w2;
    StepPair out;
    if (negligible(vw, norm(v) * norm(w))) {
        return out;
    }
    if (!negligible(ev, norm(e) * norm(v))) {
        out.tb = (v1 * w1 * e2 * (b2 - c2) + v2 * w2 * e1 * (b1 - c1) +
                  v1 * w2 * (e1 * (b2 - a2) - e2 * (2 * b1 - a1 - c1)) +
                  v2 * w1 * (e2 * (b1 - a1) - e1 * (2 * b2 - a2 - c2))) /
                 (2 * vw * ev);
    }
    if (!negligible(ew, norm(e) * norm(w))) {
        out.tc = (v1 * w1 * e2 * (b2 - c2) + v2 * w2 * e1 * (b1 - c1) +
                  v2 * w1 * (-e1 * (c2 - a2) + e2 * (2 * c1 - a1 - b1)) +
                  v1 * w2 * (-e2 * (c1 - a1) + e1 * (2 * c2 - a2 - b2))) /
                 (2 * vw * ew);
    }
    return out;
}

}  // namespace mit
