#include "hcaudit/compare.hpp"

#include <chrono>

#include "hcaudit/errors.hpp"

namespace hcaudit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

ComparisonRecord compare_one(const Digraph& d, const Limits& limits) {
    ComparisonRecord rec;
    rec.instance = d;

    auto t = Clock::now();
    rec.paper_verdict = decide_paper(d);
    rec.timings.paper_ms = ms_since(t);

    t = Clock::now();
    rec.exact_verdict = decide_exact_via_matchings(d, limits.enumeration_limit);
    rec.timings.exact_ms = ms_since(t);

    t = Clock::now();
    const int n = d.vertex_count();
    if (n < 2) {
        // Below the Hamiltonian length bound; no DP needed.
        rec.oracle = OracleResult{false, std::nullopt, OracleMethod::HeldKarp};
    } else if (n <= limits.held_karp_max_n) {
        rec.oracle = held_karp(d);
    } else {
        BacktrackOutcome out = backtrack_hc(d, limits.backtrack_node_budget);
        rec.oracle_nodes = out.nodes_expanded;
        if (out.result) rec.oracle = *out.result;
    }
    rec.timings.oracle_ms = ms_since(t);

    if (rec.oracle) {
        rec.discrepancy = rec.paper_verdict.kind == VerdictKind::ClaimedHamiltonian &&
                          !rec.oracle->hamiltonian;
        const bool paper_negative =
            rec.paper_verdict.kind == VerdictKind::NoPerfectMatching ||
            rec.paper_verdict.kind == VerdictKind::RankDeficient;
        if (paper_negative && rec.oracle->hamiltonian) {
            throw Error(Errc::SoundnessViolation,
                        "pipeline returned " +
                            std::string(verdict_kind_name(rec.paper_verdict.kind)) +
                            " on a Hamiltonian instance");
        }
    }
    return rec;
}

namespace {

bool is_discrepant(const Digraph& d, const Limits& limits) {
    return compare_one(d, limits).is_discrepant();
}

Digraph without_arc(const Digraph& d, int remove) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(d.arc_count() - 1));
    for (int j = 0; j < d.arc_count(); ++j) {
        if (j != remove) arcs.push_back(d.arc(j));
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

Digraph compact_vertices(const Digraph& d) {
    std::vector<int> label(static_cast<std::size_t>(d.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) > 0 || d.in_degree(v) > 0) {
            label[static_cast<std::size_t>(v)] = next++;
        }
    }
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const auto& [u, v] : d.arcs()) {
        arcs.emplace_back(label[static_cast<std::size_t>(u)],
                          label[static_cast<std::size_t>(v)]);
    }
    return Digraph(next, std::move(arcs));
}

}  // namespace

ShrinkResult shrink(const Digraph& d, const Limits& limits) {
    if (!is_discrepant(d, limits)) {
        throw Error(Errc::NotADiscrepancy, "shrink requires a discrepancy instance");
    }
    Digraph cur = d;
    bool progress = true;
    while (progress) {
        progress = false;
        int j = 0;
        while (j < cur.arc_count()) {
            Digraph candidate = without_arc(cur, j);
            if (is_discrepant(candidate, limits)) {
                cur = std::move(candidate);
                progress = true;  // re-test the arc that slid into slot j
            } else {
                ++j;
            }
        }
    }
    ShrinkResult result;
    result.pre_compaction = cur;
    result.shrunk = compact_vertices(cur);
    return result;
}

}  // namespace hcaudit
