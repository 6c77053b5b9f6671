#include "mit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mit/bench.hpp"
#include "mit/generators.hpp"
#include "mit/maximizer.hpp"
#include "mit/oracles.hpp"
#include "mit/polygon_io.hpp"
#include "mit/svg.hpp"

namespace mit {

using Json = nlohmann::ordered_json;

std::vector<AnchoredTriangle> anchored_overlay(const ConvexPolygon& poly, std::size_t k) {
    std::vector<AnchoredTriangle> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
        out.push_back(anchored_triangle(poly, Direction::from_angle(theta)));
    }
    return out;
}

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string kind = "regular";
    std::size_t n = 0;
    std::uint64_t seed = 1;
    double ux = 1.0;
    double uy = 0.0;
    std::string format = "text";
    std::string svg;
    std::size_t k = kDefaultOverlayDirections;
    std::vector<std::size_t> sizes;
    std::size_t trials = 5;
    std::string out;
};

ConvexPolygon load_polygon(const std::string& path, std::istream& in) {
    ParsedPolygon parsed = path == "-" ? parse_polygon(in) : read_polygon_file(path);
    try {
        return validate_polygon(parsed.points);
    } catch (const PolygonError& e) {
        std::string msg;
        if (e.vertex() && *e.vertex() < parsed.lines.size()) {
            msg = "line " + std::to_string(parsed.lines[*e.vertex()]) + ": ";
        }
        throw InputError(msg + to_string(e.kind()) + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content) || !f.flush()) {
        throw InputError("cannot write '" + path + "'");
    }
}

Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

Json edge_point_json(const ConvexPolygon& poly, EdgePoint e) {
    return Json{{"edge", e.edge}, {"frac", e.frac}, {"point", point_json(edge_point_coords(poly, e))}};
}

std::string point_text(Point2 p) { return format_real(p.x) + ' ' + format_real(p.y); }

void report_triangle(const ConvexPolygon& poly, const MaxResult& r, const Options& opt, std::ostream& out) {
    const std::array<std::size_t, 3> idx{r.ia_max, r.ib_max, r.ic_max};
    if (opt.format == "json") {
        Json coords = Json::array();
        for (std::size_t i : idx) {
            coords.push_back(point_json(poly.vertex(static_cast<long long>(i))));
        }
        const Json j{{"indices", idx}, {"coordinates", coords}, {"area", r.area_max},
                     {"iterations", r.iterations}, {"n", poly.size()}};
        out << j.dump() << '\n';
    } else {
        out << "n: " << poly.size() << '\n';
        out << "indices: " << idx[0] << ' ' << idx[1] << ' ' << idx[2] << '\n';
        const char* names[] = {"a", "b", "c"};
        for (int k = 0; k < 3; ++k) {
            out << names[k] << ": " << point_text(poly.vertex(static_cast<long long>(idx[k]))) << '\n';
        }
        out << "area: " << format_real(r.area_max) << '\n';
        out << "iterations: " << r.iterations << '\n';
    }
    if (!opt.svg.empty()) {
        const TriangleCoords tri{poly.vertex(static_cast<long long>(idx[0])), poly.vertex(static_cast<long long>(idx[1])),
                                 poly.vertex(static_cast<long long>(idx[2]))};
        write_file(opt.svg, render_svg(poly.vertices(), std::span<const TriangleCoords>(&tri, 1)));
    }
}

void cmd_gen(const Options& opt, std::ostream& out) {
    const auto kind = parse_polygon_kind(opt.kind);
    if (!kind) {
        throw InputError("unknown polygon kind '" + opt.kind + "'");
    }
    const std::string text = format_polygon(generate_polygon(*kind, opt.n, opt.seed));
    if (opt.out.empty()) {
        out << text;
    } else {
        write_file(opt.out, text);
    }
}

void cmd_max(const Options& opt, std::istream& in, std::ostream& out) {
    const ConvexPolygon poly = load_polygon(opt.input, in);
    report_triangle(poly, largest_inscribed_triangle(poly), opt, out);
}

void cmd_oracle(const Options& opt, std::istream& in, std::ostream& out) {
    const ConvexPolygon poly = load_polygon(opt.input, in);
    MaxResult r;
    try {
        r = brute_force_max_triangle(poly);
    } catch (const OracleError& e) {
        throw InputError(e.what());
    }
    report_triangle(poly, r, opt, out);
}

void cmd_anchored(const Options& opt, std::istream& in, std::ostream& out) {
    const ConvexPolygon poly = load_polygon(opt.input, in);
    Direction u = Direction::from_components(1.0, 0.0);
    try {
        u = Direction::from_components(opt.ux, opt.uy);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const AnchoredTriangle t = anchored_triangle(poly, u);
    const Point2 a = poly.vertex(static_cast<long long>(t.a_index));
    if (opt.format == "json") {
        const Json j{{"u", Json::array({u.ux(), u.uy()})},
                     {"a", Json{{"index", t.a_index}, {"point", point_json(a)}}},
                     {"b", edge_point_json(poly, t.b)},
                     {"c", edge_point_json(poly, t.c)},
                     {"area", t.area}};
        out << j.dump() << '\n';
        return;
    }
    out << "u: " << format_real(u.ux()) << ' ' << format_real(u.uy()) << '\n';
    out << "a: " << t.a_index << " at " << point_text(a) << '\n';
    out << "b: edge " << t.b.edge << " frac " << format_real(t.b.frac) << " at "
        << point_text(edge_point_coords(poly, t.b)) << '\n';
    out << "c: edge " << t.c.edge << " frac " << format_real(t.c.frac) << " at "
        << point_text(edge_point_coords(poly, t.c)) << '\n';
    out << "area: " << format_real(t.area) << '\n';
}

void cmd_trace(const Options& opt, std::istream& in, std::ostream& out) {
    const ConvexPolygon poly = load_polygon(opt.input, in);
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out, std::ios::binary);
        if (!file) {
            throw InputError("cannot write '" + opt.out + "'");
        }
    }
    std::ostream& sink = opt.out.empty() ? out : file;
    std::size_t step = 0;
    const MaxResult r = largest_inscribed_triangle(poly, [&](const TriangleState& s) {
        const Json j{{"step", step++}, {"ia", s.ia}, {"ib", s.ib}, {"sb", s.sb},
                     {"ic", s.ic}, {"sc", s.sc}, {"q_zero", s.q_was_zero}};
        sink << j.dump() << '\n';
    });
    if (!opt.out.empty()) {
        if (!file.flush()) {
            throw InputError("cannot write '" + opt.out + "'");
        }
        out << "snapshots: " << step << '\n';
        out << "area: " << format_real(r.area_max) << '\n';
    }
    if (!opt.svg.empty()) {
        std::vector<TriangleCoords> tris;
        for (const AnchoredTriangle& t : anchored_overlay(poly, opt.k)) {
            tris.push_back({poly.vertex(static_cast<long long>(t.a_index)), edge_point_coords(poly, t.b),
                            edge_point_coords(poly, t.c)});
        }
        SvgStyle style;
        style.triangle_opacity = std::clamp(4.0 / static_cast<double>(std::max<std::size_t>(opt.k, 1)), 0.02, 0.35);
        write_file(opt.svg, render_svg(poly.vertices(), tris, style));
    }
}

void cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto kind = parse_polygon_kind(opt.kind);
    if (!kind) {
        throw InputError("unknown polygon kind '" + opt.kind + "'");
    }
    for (std::size_t n : opt.sizes) {
        if (n < 3) {
            throw InputError("bench sizes must be >= 3");
        }
    }
    BenchOptions bo;
    bo.sizes = opt.sizes;
    bo.trials = opt.trials;
    bo.kind = *kind;
    bo.seed = opt.seed;
    const std::vector<BenchRecord> records = run_bench(bo);
    const std::string csv = bench_csv(records);
    const auto slope = loglog_slope(records);
    const std::string slope_line = "loglog_slope: " + (slope ? format_real(*slope) : std::string("n/a")) + '\n';
    if (opt.out.empty()) {
        out << csv;
        err << slope_line;
    } else {
        write_file(opt.out, csv);
        out << slope_line;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum-area triangle inscribed in a convex polygon", "mit"};
    app.require_subcommand(1);
    Options opt;

    const auto kinds = CLI::IsMember({"regular", "jittered", "hull-of-random"});
    const auto formats = CLI::IsMember({"text", "json"});

    auto* gen = app.add_subcommand("gen", "Generate a convex polygon");
    gen->add_option("--kind", opt.kind, "regular, jittered or hull-of-random")->check(kinds);
    gen->add_option("--n", opt.n, "Number of vertices (points for hull-of-random)")->required()->check(CLI::Range(3, 1 << 30));
    gen->add_option("--seed", opt.seed, "Random seed");
    gen->add_option("--out", opt.out, "Write to this file instead of stdout");

    auto* max = app.add_subcommand("max", "Largest inscribed triangle");
    max->add_option("input", opt.input, "Polygon file, '-' for stdin")->required();
    max->add_option("--format", opt.format)->check(formats);
    max->add_option("--svg", opt.svg, "Write an SVG of the polygon and triangle");

    auto* oracle = app.add_subcommand("oracle", "Largest inscribed triangle by exhaustive search");
    oracle->add_option("input", opt.input, "Polygon file, '-' for stdin")->required();
    oracle->add_option("--format", opt.format)->check(formats);
    oracle->add_option("--svg", opt.svg, "Write an SVG of the polygon and triangle");

    auto* anchored = app.add_subcommand("anchored", "Triangle anchored to a direction");
    anchored->add_option("input", opt.input, "Polygon file, '-' for stdin")->required();
    anchored->add_option("--ux", opt.ux, "Direction x component");
    anchored->add_option("--uy", opt.uy, "Direction y component");
    anchored->add_option("--format", opt.format)->check(formats);

    auto* trace = app.add_subcommand("trace", "Sweep snapshots as JSON lines");
    trace->add_option("input", opt.input, "Polygon file, '-' for stdin")->required();
    trace->add_option("--out", opt.out, "Write snapshots to this file instead of stdout");
    trace->add_option("--svg", opt.svg, "Write an overlay of anchored triangles");
    trace->add_option("--k", opt.k, "Number of overlay directions")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "Timing and iteration counts over polygon sizes");
    bench->add_option("--sizes", opt.sizes, "Comma-separated sizes")->delimiter(',')->required();
    bench->add_option("--trials", opt.trials, "Trials per size");
    bench->add_option("--kind", opt.kind, "regular, jittered or hull-of-random")->check(kinds);
    bench->add_option("--seed", opt.seed, "Seed of the first trial");
    bench->add_option("--out", opt.out, "Write CSV to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gen->parsed()) {
            cmd_gen(opt, out);
        } else if (max->parsed()) {
            cmd_max(opt, in, out);
        } else if (oracle->parsed()) {
            cmd_oracle(opt, in, out);
        } else if (anchored->parsed()) {
            cmd_anchored(opt, in, out);
        } else if (trace->parsed()) {
            cmd_trace(opt, in, out);
        } else if (bench->parsed()) {
            cmd_bench(opt, out, err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const GenerationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const SweepError& e) {
        err << "internal error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitInternalError;
    }
    return kExitOk;
}

}  // namespace mit
