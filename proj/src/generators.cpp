#include "mit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mit {

const char* to_string(PolygonKind kind) {
    switch (kind) {
        case PolygonKind::Regular:
            return "regular";
        case PolygonKind::Jittered:
            return "jittered";
        case PolygonKind::HullOfRandom:
            return "hull-of-random";
    }
    return "unknown";
}

std::optional<PolygonKind> parse_polygon_kind(std::string_view name) {
    for (PolygonKind k : {PolygonKind::Regular, PolygonKind::Jittered, PolygonKind::HullOfRandom}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

UniformSource::UniformSource(std::uint64_t seed) : engine_(seed) {}

double UniformSource::next() {
    // Top 53 bits, so the value is exact and identical on every platform.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

void require_size(std::size_t n) {
    if (n < 3) {
        throw GenerationError("polygon generators need n >= 3, got " + std::to_string(n));
    }
}

Point2 on_circle(double r, std::size_t k, std::size_t n) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

std::vector<Point2> regular_polygon(std::size_t n) {
    require_size(n);
    std::vector<Point2> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(on_circle(1.0, k, n));
    }
    return out;
}

double default_jitter_amplitude(std::size_t n) {
    const double t = std::tan(std::numbers::pi / static_cast<double>(n));
    return std::min(0.25, 0.5 * t * t);
}

std::vector<Point2> jittered_polygon(std::size_t n, std::uint64_t seed, std::optional<double> amplitude) {
    require_size(n);
    const double amp = amplitude.value_or(default_jitter_amplitude(n));
    if (!(amp >= 0.0) || amp >= 1.0) {
        throw GenerationError("jitter amplitude must lie in [0, 1)");
    }
    UniformSource rng(seed);
    std::vector<Point2> out(n);
    for (int attempt = 0; attempt < kJitterRetries; ++attempt) {
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = on_circle(1.0 + rng.next(-amp, amp), k, n);
        }
        try {
            validate_polygon(out);
            return out;
        } catch (const PolygonError&) {
        }
    }
    throw GenerationError("jittered polygon with n = " + std::to_string(n) + " failed validation after " +
                          std::to_string(kJitterRetries) + " attempts");
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
    std::sort(points.begin(), points.end(), [](Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) {
        return points;
    }
    std::vector<Point2> hull(2 * points.size());
    std::size_t k = 0;
    auto turn = [&](Point2 p) { return wedge(hull[k - 1] - hull[k - 2], p - hull[k - 1]); };
    for (const Point2& p : points) {
        while (k >= 2 && turn(p) <= 0.0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (k >= lower && turn(*it) <= 0.0) {
            --k;
        }
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Point2> hull_of_random(std::size_t n, std::uint64_t seed) {
    require_size(n);
    UniformSource rng(seed);
    for (int attempt = 0; attempt < kJitterRetries; ++attempt) {
        std::vector<Point2> pts;
        pts.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double r = std::sqrt(rng.next());
            const double theta = 2.0 * std::numbers::pi * rng.next();
            pts.push_back({r * std::cos(theta), r * std::sin(theta)});
        }
        std::vector<Point2> hull = dedupe_collinear(convex_hull(std::move(pts)));
        try {
            validate_polygon(hull);
            return hull;
        } catch (const PolygonError&) {
        }
    }
    throw GenerationError("hull-of-random with n = " + std::to_string(n) + " kept degenerating");
}

std::vector<Point2> generate_polygon(PolygonKind kind, std::size_t n, std::uint64_t seed) {
    switch (kind) {
        case PolygonKind::Regular:
            return regular_polygon(n);
        case PolygonKind::Jittered:
            return jittered_polygon(n, seed);
        case PolygonKind::HullOfRandom:
            return hull_of_random(n, seed);
    }
    throw GenerationError("unknown polygon kind");
}

}  // namespace mit
