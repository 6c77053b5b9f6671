#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mit/geom_core.hpp"

namespace mit {

enum class SweepErrorKind { IterationCapExceeded, NoAdmissibleStep, NoVertexTriple };

const char* to_string(SweepErrorKind kind);

/// Raised when a sweep breaks one of its internal invariants. This signals a
/// numerical-robustness failure on validated input, never a caller error.
class SweepError : public std::runtime_error {
public:
    SweepError(SweepErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    SweepErrorKind kind() const { return kind_; }

private:
    SweepErrorKind kind_;
};

/// Maximum-area inscribed triangle whose side bc has outer normal u. The vertex
/// a sits where −u is an outer normal of the polygon; a, b, c run counter-clockwise.
struct AnchoredTriangle {
    std::size_t a_index = 0;
    EdgePoint b;
    EdgePoint c;
    Direction u = Direction::from_components(1.0, 0.0);
    double area = 0.0;
    std::size_t iterations = 0;
};

/// Unwrapped search state: b = p_ib(1 − sb) + p_{ib+1}·sb, same for c.
/// sb lies in (0, 1] and sc in [0, 1).
struct AnchoredState {
    long long ia = 0;
    long long ib = 0;
    double sb = 1.0;
    long long ic = 0;
    double sc = 0.0;
    std::size_t iterations = 0;
};

/// Starts with b = c at the u-maximal vertex and pulls b clockwise and c
/// counter-clockwise along the u-perpendicular chord until the area stops
/// growing. Each iteration moves b or c onto a new edge or terminates, so the
/// loop runs at most 2n times.
AnchoredState anchored_search(const ConvexPolygon& poly, const Direction& u);

AnchoredTriangle anchored_triangle(const ConvexPolygon& poly, const Direction& u);

/// One-sided area derivatives at an anchored or candidate-anchored triangle.
/// Q_{-+} uses the backward tangent at b and the forward tangent at c, Q_{+-}
/// the opposite. A tangent parallel to the chord yields −inf (at b) or +inf
/// (at c); both at once yields NaN.
struct AnchoredCertificate {
    double q_minus_plus = 0.0;
    double q_plus_minus = 0.0;
    double scale = 0.0;

    /// Q_{-+} >= 0 and Q_{+-} <= 0 up to kRelTol·scale. An undefined (NaN)
    /// side imposes no condition.
    bool holds() const;
};

AnchoredCertificate anchored_certificate(const ConvexPolygon& poly, std::size_t a_index, EdgePoint b, EdgePoint c);

/// Forward (+) and backward (−) counter-clockwise tangents at a boundary point.
Vec2 forward_tangent(const ConvexPolygon& poly, EdgePoint x);
Vec2 backward_tangent(const ConvexPolygon& poly, EdgePoint x);

}  // namespace mit
