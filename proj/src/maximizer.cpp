#include "mit/maximizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "mit/evolution_formulas.hpp"

namespace mit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point2 on_edge(const ConvexPolygon& poly, long long edge, double frac) {
    return edge_point_coords(poly, {poly.wrap(edge), frac});
}

// Moves a point sitting at the end of its edge onto the start of the next.
void normalize(TriangleState& s) {
    if (s.sb >= 1.0) {
        ++s.ib;
        s.sb = 0.0;
        s.q_was_zero = false;
    }
    if (s.sc >= 1.0) {
        ++s.ic;
        s.sc = 0.0;
        s.q_was_zero = false;
    }
}

double snap(double s) { return s >= 1.0 - kFracTol ? 1.0 : s; }

// Ratio guarded against a vanishing denominator; +inf means "never".
double ratio(double num, double den, double den_scale) {
    if (std::abs(den) <= kRelTol * den_scale) {
        return kInf;
    }
    return num / den;
}

struct Candidate {
    double t = kInf;
    int event = 0;
};

// Smallest strictly positive step; event 1 (edge end) is always available.
Candidate smallest_positive(std::initializer_list<Candidate> cands) {
    Candidate best;
    for (const Candidate& c : cands) {
        if (c.t > 0.0 && c.t < best.t) {
            best = c;
        }
    }
    return best;
}

struct PairCandidate {
    double tb = 0.0;
    double tc = 0.0;
    int event = 0;
};

// Moves b and/or c; a is left untouched.
TriangleState evolve(const TriangleState& in, const ConvexPolygon& poly) {
    TriangleState s = in;
    const Point2 a = poly.vertex(s.ia);
    const Point2 b = on_edge(poly, s.ib, s.sb);
    const Point2 c = on_edge(poly, s.ic, s.sc);
    const Vec2 ea = poly.edge(s.ia);
    const Vec2 eb = poly.edge(s.ib);
    const Vec2 ec = poly.edge(s.ic);
    const Vec2 chord = c - b;

    const double q = calculate_Q(a, b, eb, c, ec);
    const bool zero = s.q_was_zero || std::abs(q) <= kRelTol * q_scale(a, b, eb, c, ec);

    if (!zero && q > 0.0) {
        // c sits at a vertex; b advances alone.
        const Candidate edge_end{1.0 - s.sb, 1};
        const Candidate parallel{ratio(wedge(ea, chord), wedge(ea, eb), norm(ea) * norm(eb)), 3};
        const Candidate root{calculate_tb4(a, b, eb, c, ec).value_or(kInf), 4};
        const Candidate step = smallest_positive({edge_end, parallel, root});
        s.sb = step.event == 1 ? 1.0 : snap(s.sb + step.t);
        s.q_was_zero = step.event == 4;
    } else if (!zero && q < 0.0) {
        // b sits at a vertex; c advances alone.
        const Candidate edge_end{1.0 - s.sc, 2};
        const Candidate parallel{ratio(wedge(ea, b - c), wedge(ea, ec), norm(ea) * norm(ec)), 3};
        const Candidate root{calculate_tc4(a, b, eb, c, ec).value_or(kInf), 4};
        const Candidate step = smallest_positive({edge_end, parallel, root});
        s.sc = step.event == 2 ? 1.0 : snap(s.sc + step.t);
        s.q_was_zero = step.event == 4;
    } else {
        // b and c move together along beta·tb − gamma·tc + alpha·tb·tc = 0.
        const CoefficientTriple k = calculate_alpha_beta_gamma(a, b, eb, c, ec);
        const double room_b = 1.0 - s.sb;
        const double room_c = 1.0 - s.sc;
        const double coef_scale = std::max({std::abs(k.alpha), std::abs(k.beta), std::abs(k.gamma)});

        std::array<std::optional<PairCandidate>, 3> pairs;
        const double tc1 = ratio(k.beta * room_b, k.gamma - k.alpha * room_b, coef_scale);
        pairs[0] = PairCandidate{room_b, tc1, 1};
        const double tb2 = ratio(k.gamma * room_c, k.beta + k.alpha * room_c, coef_scale);
        pairs[1] = PairCandidate{tb2, room_c, 2};
        const StepPair t3 = calculate_tb3_tc3(a, ea, b, eb, c, ec);
        if (t3.tb && t3.tc) {
            pairs[2] = PairCandidate{*t3.tb, *t3.tc, 3};
        }

        std::optional<PairCandidate> best;
        for (const auto& p : pairs) {
            if (!p) {
                continue;
            }
            const bool admissible = p->tb >= -kFracTol && p->tb <= room_b + kFracTol && p->tc >= -kFracTol &&
                                    p->tc <= room_c + kFracTol;
            if (admissible && (!best || p->tb < best->tb)) {
                best = PairCandidate{std::clamp(p->tb, 0.0, room_b), std::clamp(p->tc, 0.0, room_c), p->event};
            }
        }
        if (!best) {
            throw SweepError(SweepErrorKind::NoAdmissibleStep,
                             "no admissible step along the Q = 0 relation at a = " + std::to_string(s.ia));
        }
        s.sb = best->event == 1 ? 1.0 : snap(s.sb + best->tb);
        s.sc = best->event == 2 ? 1.0 : snap(s.sc + best->tc);
        s.q_was_zero = true;
    }
    normalize(s);
    return s;
}

void advance_a(TriangleState& s) { ++s.ia; }

MaxResult run_sweep(const ConvexPolygon& poly, const SweepObserver* observer, std::vector<TriangleState>* trace) {
    const auto n = static_cast<long long>(poly.size());
    const std::size_t cap = kIterationCapFactor * poly.size();

    TriangleState state = initial_sweep_state(poly);
    const long long ia_init = state.ia;

    MaxResult result;
    double best = -1.0;
    auto record = [&](const TriangleState& s) {
        if (s.sb != 0.0 || s.sc != 0.0) {
            return;
        }
        const double area = triangle_area(poly.vertex(s.ia), poly.vertex(s.ib), poly.vertex(s.ic));
        if (area > best) {
            best = area;
            result.ia_max = poly.wrap(s.ia);
            result.ib_max = poly.wrap(s.ib);
            result.ic_max = poly.wrap(s.ic);
        }
    };

    while (true) {
        if (++result.iterations > cap) {
            throw SweepError(SweepErrorKind::IterationCapExceeded,
                             "sweep exceeded " + std::to_string(cap) + " iterations for n = " + std::to_string(n));
        }
        if (observer) {
            (*observer)(state);
        }
        if (trace) {
            trace->push_back(state);
        }
        record(state);
        if (a_advance_due(poly, state)) {
            if (state.ia == ia_init + n) {
                break;
            }
            advance_a(state);
            record(state);
        }
        state = evolve(state, poly);
    }
    if (best < 0.0) {
        throw SweepError(SweepErrorKind::NoVertexTriple, "sweep never visited a vertex triple");
    }
    result.area_max = best;
    return result;
}

}  // namespace

Point2 state_b(const ConvexPolygon& poly, const TriangleState& s) { return on_edge(poly, s.ib, s.sb); }
Point2 state_c(const ConvexPolygon& poly, const TriangleState& s) { return on_edge(poly, s.ic, s.sc); }

TriangleState initial_sweep_state(const ConvexPolygon& poly) {
    const auto n = static_cast<long long>(poly.size());
    const AnchoredState anchored = anchored_search(poly, Direction::from_components(1.0, 0.0));
    TriangleState s;
    s.ia = static_cast<long long>(poly.wrap(anchored.ia));
    s.ib = anchored.ib;
    s.sb = anchored.sb;
    s.ic = anchored.ic;
    s.sc = anchored.sc;
    normalize(s);
    s.q_was_zero = false;
    // Place b in [ia, ia + n) and c at or after b.
    s.ib = s.ia + static_cast<long long>(poly.wrap(s.ib - s.ia));
    s.ic = s.ib + static_cast<long long>(poly.wrap(s.ic - s.ib));
    if (s.ic == s.ib && s.sc < s.sb) {
        s.ic += n;
    }
    return s;
}

bool a_advance_due(const ConvexPolygon& poly, const TriangleState& s) {
    const Vec2 ea = poly.edge(s.ia);
    const Vec2 chord = state_c(poly, s) - state_b(poly, s);
    return std::abs(wedge(ea, chord)) <= kRelTol * norm(ea) * norm(chord);
}

TriangleState sweep_step(const TriangleState& state, const ConvexPolygon& poly) {
    TriangleState s = state;
    normalize(s);
    if (a_advance_due(poly, s)) {
        advance_a(s);
    }
    return evolve(s, poly);
}

MaxResult largest_inscribed_triangle(const ConvexPolygon& poly, bool trace) {
    if (!trace) {
        return run_sweep(poly, nullptr, nullptr);
    }
    std::vector<TriangleState> states;
    MaxResult result = run_sweep(poly, nullptr, &states);
    result.trace = std::move(states);
    return result;
}

MaxResult largest_inscribed_triangle(const ConvexPolygon& poly, const SweepObserver& observer) {
    return run_sweep(poly, observer ? &observer : nullptr, nullptr);
}

}  // namespace mit
