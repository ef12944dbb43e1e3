#include "hcaudit/bench.hpp"

#include <cmath>
#include <sstream>

#include "hcaudit/decider.hpp"
#include "hcaudit/errors.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/rng.hpp"

namespace hcaudit {

BenchResult bench_scaling(const std::vector<int>& n_list, double p, std::uint64_t seed,
                          int repeats) {
    if (repeats < 1) throw Error(Errc::InfeasibleSpec, "repeats must be >= 1");
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw Error(Errc::InfeasibleSpec, "n_list must be strictly ascending");
        }
    }

    BenchResult result;
    for (int n : n_list) {
        GenSpec spec;
        spec.family = Family::Gnp;
        spec.n = n;
        spec.p = p;
        spec.seed = mix_seed(seed, static_cast<std::uint64_t>(n));
        const Digraph d = generate(spec);

        BenchRow row{n, d.arc_count(), 0.0, 0.0, 0.0, 0.0, 0.0};
        for (int r = 0; r < repeats; ++r) {
            StageTimings t;
            decide_paper_timed(d, t);
            row.mean_total_ms += t.total_ms;
            row.zmap_ms += t.zmap_ms;
            row.matching_ms += t.matching_ms;
            row.allowed_ms += t.allowed_ms;
            row.rank_ms += t.rank_ms;
        }
        row.mean_total_ms /= repeats;
        row.zmap_ms /= repeats;
        row.matching_ms /= repeats;
        row.allowed_ms /= repeats;
        row.rank_ms /= repeats;
        result.rows.push_back(row);
    }

    // Fit log t = a + slope * log n over rows with a measurable mean.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const BenchRow& row : result.rows) {
        if (row.mean_total_ms <= 0.0) continue;
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(row.mean_total_ms);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        const double denom = count * sxx - sx * sx;
        if (denom > 0) result.loglog_slope = (count * sxy - sx * sy) / denom;
    }
    return result;
}

std::string bench_to_csv(const BenchResult& result) {
    std::ostringstream out;
    out << "n,arcs,mean_total_ms,zmap_ms,matching_ms,allowed_ms,rank_ms\n";
    for (const BenchRow& row : result.rows) {
        out << row.n << ',' << row.arcs << ',' << row.mean_total_ms << ',' << row.zmap_ms
            << ',' << row.matching_ms << ',' << row.allowed_ms << ',' << row.rank_ms << '\n';
    }
    if (result.loglog_slope) {
        out << "# loglog_slope=" << *result.loglog_slope << '\n';
    }
    return out.str();
}

}  // namespace hcaudit
