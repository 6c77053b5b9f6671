#include "mit/polygon_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

namespace mit {

namespace {

constexpr std::string_view kBlank = " \t\r\f\v";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kBlank);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(kBlank);
    return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

ParsedPolygon parse_polygon(std::istream& in) {
    ParsedPolygon out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto start = line.find_first_not_of(kBlank, pos);
            if (start == std::string_view::npos) {
                break;
            }
            const auto end = std::min(line.find_first_of(kBlank, start), line.size());
            tokens.push_back(line.substr(start, end - start));
            pos = end;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected two numbers, got '" +
                                          std::string(line) + "'");
        }
        Point2 p;
        if (!parse_number(tokens[0], p.x) || !parse_number(tokens[1], p.y)) {
            throw ParseError(line_no, "line " + std::to_string(line_no) + ": not a pair of decimal numbers: '" +
                                          std::string(line) + "'");
        }
        out.points.push_back(p);
        out.lines.push_back(line_no);
    }
    return out;
}

ParsedPolygon parse_polygon_text(const std::string& text) {
    std::istringstream in(text);
    return parse_polygon(in);
}

ParsedPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open polygon file '" + path + "'");
    }
    return parse_polygon(in);
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_polygon(std::span<const Point2> points) {
    std::string out;
    out.reserve(points.size() * 48);
    for (const Point2& p : points) {
        out += format_real(p.x);
        out += ' ';
        out += format_real(p.y);
        out += '\n';
    }
    return out;
}

}  // namespace mit
