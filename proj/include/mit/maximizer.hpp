#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mit/anchored.hpp"
#include "mit/geom_core.hpp"

namespace mit {

/// Sweep iterations are capped at this multiple of n. Exceeding it raises
/// SweepError(IterationCapExceeded).
inline constexpr std::size_t kIterationCapFactor = 12;

/// Candidate-anchored triangle carried by the sweep. Indices are unwrapped so
/// progress is monotone: ia <= ib <= ic <= ia + n, and b = p_ib(1 − sb) + p_{ib+1}·sb.
/// Between steps the fractions satisfy 0 <= sb, sc < 1.
struct TriangleState {
    long long ia = 0;
    long long ib = 0;
    double sb = 0.0;
    long long ic = 0;
    double sc = 0.0;
    /// Set while b and c travel together along the Q = 0 relation; cleared
    /// whenever b or c moves onto a new edge so Q is re-evaluated there.
    bool q_was_zero = false;

    friend bool operator==(const TriangleState&, const TriangleState&) = default;
};

struct MaxResult {
    std::size_t ia_max = 0;
    std::size_t ib_max = 0;
    std::size_t ic_max = 0;
    double area_max = 0.0;
    std::size_t iterations = 0;
    std::vector<TriangleState> trace;
};

using SweepObserver = std::function<void(const TriangleState&)>;

/// Largest-area triangle with vertices on the polygon, in O(n). Returned
/// indices are in [0, n). With trace set, every loop-top state is kept.
MaxResult largest_inscribed_triangle(const ConvexPolygon& poly, bool trace = false);

/// Same sweep, streaming each loop-top state to the observer instead of
/// storing it.
MaxResult largest_inscribed_triangle(const ConvexPolygon& poly, const SweepObserver& observer);

/// Triangle anchored to u = (1, 0), unwrapped so that ia <= ib <= ic.
TriangleState initial_sweep_state(const ConvexPolygon& poly);

/// True when the chord bc is parallel to a's forward edge, so a must move on.
bool a_advance_due(const ConvexPolygon& poly, const TriangleState& state);

/// One loop iteration: advances a if due, then moves b and/or c to the first
/// stopping event (edge end, chord parallel to a's edge, Q reaching zero).
TriangleState sweep_step(const TriangleState& state, const ConvexPolygon& poly);

Point2 state_b(const ConvexPolygon& poly, const TriangleState& s);
Point2 state_c(const ConvexPolygon& poly, const TriangleState& s);

}  // namespace mit
