#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mit/generators.hpp"

namespace mit {

struct BenchRecord {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::string generator;
    double mean_iterations = 0.0;
    double mean_wall_time_s = 0.0;
    /// Largest iteration count seen over the trials (not part of the CSV).
    std::size_t max_iterations = 0;
};

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::size_t trials = 5;
    PolygonKind kind = PolygonKind::Regular;
    std::uint64_t seed = 1;
    /// Each timed solve is repeated until this much time has accumulated and
    /// the mean is reported, which keeps small sizes above timer resolution.
    double min_timed_s = 2e-3;
};

/// Trial t of size n solves generate_polygon(kind, n, seed + t). Generation
/// and validation happen outside the timed region. trials == 0 yields no rows.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader = "n,trials,generator,mean_iterations,mean_wall_time_s";

std::string bench_csv(std::span<const BenchRecord> records);

/// Least-squares slope of log(mean_wall_time_s) against log(n). Empty when
/// fewer than two distinct sizes have positive times.
std::optional<double> loglog_slope(std::span<const BenchRecord> records);

}  // namespace mit
