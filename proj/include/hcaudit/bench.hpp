#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcaudit {

struct BenchRow {
    int n;
    int arcs;
    double mean_total_ms;
    double zmap_ms;
    double matching_ms;
    double allowed_ms;
    double rank_ms;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    /// Least-squares slope of log(mean total) against log(n); absent with
    /// fewer than two measurable sizes.
    std::optional<double> loglog_slope;
};

/// Generates one Gnp(n, p) instance per size (seed-derived, reproducible)
/// and times decide_paper `repeats` times each, reporting per-stage means.
/// n_list must be ascending.
BenchResult bench_scaling(const std::vector<int>& n_list, double p, std::uint64_t seed,
                          int repeats);

/// CSV with a header row; the fitted slope rides along as a trailing
/// "# loglog_slope=..." comment line when present.
std::string bench_to_csv(const BenchResult& result);

}  // namespace hcaudit
