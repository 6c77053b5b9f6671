#include "mit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mit/maximizer.hpp"
#include "mit/polygon_io.hpp"

namespace mit {

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    if (options.trials == 0) {
        return records;
    }
    for (std::size_t n : options.sizes) {
        BenchRecord rec;
        rec.n = n;
        rec.trials = options.trials;
        rec.generator = to_string(options.kind);
        double total_iterations = 0.0;
        double total_time = 0.0;
        for (std::size_t t = 0; t < options.trials; ++t) {
            const ConvexPolygon poly = validate_polygon(generate_polygon(options.kind, n, options.seed + t));
            std::size_t reps = 0;
            double elapsed = 0.0;
            MaxResult result;
            do {
                const auto start = Clock::now();
                result = largest_inscribed_triangle(poly);
                elapsed += std::chrono::duration<double>(Clock::now() - start).count();
                ++reps;
            } while (elapsed < options.min_timed_s);
            total_time += elapsed / static_cast<double>(reps);
            total_iterations += static_cast<double>(result.iterations);
            rec.max_iterations = std::max(rec.max_iterations, result.iterations);
        }
        rec.mean_iterations = total_iterations / static_cast<double>(options.trials);
        rec.mean_wall_time_s = total_time / static_cast<double>(options.trials);
        records.push_back(rec);
    }
    return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
    std::string out = kBenchCsvHeader;
    out += '\n';
    for (const BenchRecord& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.trials) + ',' + r.generator + ',' +
               format_real(r.mean_iterations) + ',' + format_real(r.mean_wall_time_s) + '\n';
    }
    return out;
}

std::optional<double> loglog_slope(std::span<const BenchRecord> records) {
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    double m = 0.0;
    for (const BenchRecord& r : records) {
        if (r.n == 0 || !(r.mean_wall_time_s > 0.0)) {
            continue;
        }
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(r.mean_wall_time_s);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        m += 1.0;
    }
    const double den = m * sxx - sx * sx;
    if (m < 2.0 || den <= 1e-12 * m * sxx) {
        return std::nullopt;
    }
    return (m * sxy - sx * sy) / den;
}

}  // namespace mit
