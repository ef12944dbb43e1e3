#include "hcaudit/decider.hpp"

#include <cassert>
#include <chrono>

#include "hcaudit/errors.hpp"
#include "hcaudit/incidence.hpp"
#include "hcaudit/scc.hpp"

namespace hcaudit {

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::NoPerfectMatching: return "NoPerfectMatching";
        case VerdictKind::RankDeficient: return "RankDeficient";
        case VerdictKind::ClaimedHamiltonian: return "ClaimedHamiltonian";
        case VerdictKind::Hamiltonian: return "Hamiltonian";
        case VerdictKind::NotHamiltonian: return "NotHamiltonian";
        case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Verdict decide_paper_timed(const Digraph& d, StageTimings& timings,
                           const DecideOptions& options) {
    timings = StageTimings{};
    const auto t_start = Clock::now();
    const int n = d.vertex_count();
    if (n < 2) {
        timings.total_ms = ms_since(t_start);
        return Verdict{VerdictKind::NotHamiltonian, {}, {}, {}, {}};
    }
    if (options.strong_connectivity_prefilter && !strongly_connected(d)) {
        timings.total_ms = ms_since(t_start);
        return Verdict{VerdictKind::NotHamiltonian, {}, {}, {}, {}};
    }

    auto t = Clock::now();
    const BipartiteZMap z = build_zmap(d);
    const BipartiteGraph g = to_bipartite(z);
    timings.zmap_ms = ms_since(t);

    t = Clock::now();
    const Matching m = max_matching(g);
    timings.matching_ms = ms_since(t);
    if (m.size() < n) {
        timings.total_ms = ms_since(t_start);
        return Verdict{VerdictKind::NoPerfectMatching, {}, {}, {}, {}};
    }

    t = Clock::now();
    const AllowedEdgeSet allowed = allowed_edges_with_matching(g, m);
    timings.allowed_ms = ms_since(t);

    t = Clock::now();
    const ArcSet carrier = preimage(z, EdgeSet{allowed.members});
    const RankInfo info = rank_of_arcset(d, carrier);
    timings.rank_ms = ms_since(t);
    timings.total_ms = ms_since(t_start);

    const VerdictKind kind = (info.rank == n - 1) ? VerdictKind::ClaimedHamiltonian
                                                  : VerdictKind::RankDeficient;
    return Verdict{kind, info.rank, info.components, {}, {}};
}

Verdict decide_paper(const Digraph& d, const DecideOptions& options) {
    StageTimings timings;
    return decide_paper_timed(d, timings, options);
}

Verdict decide_exact_via_matchings(const Digraph& d, std::uint64_t limit) {
    if (limit < 1) throw Error(Errc::InfeasibleSpec, "limit must be >= 1");
    const int n = d.vertex_count();
    if (n < 2) {
        return Verdict{VerdictKind::NotHamiltonian, {}, {}, {}, std::uint64_t{0}};
    }
    const BipartiteZMap z = build_zmap(d);
    const BipartiteGraph g = to_bipartite(z);

    std::uint64_t examined = 0;
    bool truncated = false;
    std::optional<Verdict> found;
    for_each_perfect_matching(g, [&](const Matching& m) {
        if (examined == limit) {
            truncated = true;  // more matchings remain beyond the budget
            return false;
        }
        ++examined;
        const ArcSet arcs = preimage(z, EdgeSet{m.edges});
        const RankInfo info = rank_of_arcset(d, arcs);
        if (info.rank == n - 1) {
            assert(classify_arcset(d, arcs) == CycleClass::HamiltonianCycle);
            found = Verdict{VerdictKind::Hamiltonian, info.rank, info.components, arcs,
                            examined};
            return false;
        }
        return true;
    });
    if (found) return *found;
    if (truncated) {
        return Verdict{VerdictKind::Unknown, {}, {}, {}, examined};
    }
    return Verdict{VerdictKind::NotHamiltonian, {}, {}, {}, examined};
}

}  // namespace hcaudit
