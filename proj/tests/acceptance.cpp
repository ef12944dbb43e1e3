// Acceptance gate: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcaudit/bench.hpp"
#include "hcaudit/campaign.hpp"
#include "hcaudit/compare.hpp"
#include "hcaudit/decider.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/incidence.hpp"
#include "hcaudit/matching.hpp"
#include "hcaudit/oracle.hpp"
#include "hcaudit/rng.hpp"
#include "hcaudit/serialize.hpp"
#include "support/oracles.hpp"

using namespace hcaudit;

namespace {

struct Outcome {
    bool pass;
    std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// All 4096 labeled digraphs on 4 vertices, as subsets of the 12 ordered
/// pairs in lexicographic order.
Digraph four_vertex_instance(unsigned mask) {
    std::vector<Arc> all;
    for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) {
            if (u != v) all.emplace_back(u, v);
        }
    }
    std::vector<Arc> arcs;
    for (unsigned bit = 0; bit < 12; ++bit) {
        if (mask >> bit & 1) arcs.push_back(all[bit]);
    }
    return Digraph(4, std::move(arcs));
}

// Criterion 1: on every Hamiltonian 4-vertex digraph the pipeline answers
// ClaimedHamiltonian and never a provably-negative verdict.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    int hamiltonian_count = 0;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        const Digraph d = four_vertex_instance(mask);
        const bool truth = held_karp(d).hamiltonian;
        const Verdict paper = decide_paper(d);
        const bool paper_negative = paper.kind == VerdictKind::NoPerfectMatching ||
                                    paper.kind == VerdictKind::RankDeficient;
        if (truth) {
            ++hamiltonian_count;
            if (paper_negative) {
                return {false, "negative verdict on Hamiltonian mask " + std::to_string(mask)};
            }
            if (paper.kind != VerdictKind::ClaimedHamiltonian) {
                return {false, "expected ClaimedHamiltonian on mask " + std::to_string(mask)};
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) {
        return {false, "took " + std::to_string(elapsed) + "s (bound 10s)"};
    }
    std::ostringstream note;
    note << "4096 instances, " << hamiltonian_count << " Hamiltonian, " << elapsed << "s";
    return {true, note.str()};
}

// Criterion 2: exact decider == Held-Karp on the 4096 plus 5000 Gnp(6).
Outcome criterion2() {
    for (unsigned mask = 0; mask < 4096; ++mask) {
        const Digraph d = four_vertex_instance(mask);
        const Verdict exact = decide_exact_via_matchings(d, 1'000'000);
        const bool truth = held_karp(d).hamiltonian;
        if (exact.kind != (truth ? VerdictKind::Hamiltonian : VerdictKind::NotHamiltonian)) {
            return {false, "disagreement on mask " + std::to_string(mask)};
        }
    }
    const double ps[3] = {0.2, 0.35, 0.5};
    for (int trial = 0; trial < 5000; ++trial) {
        GenSpec spec;
        spec.family = Family::Gnp;
        spec.n = 6;
        spec.p = ps[trial % 3];
        spec.seed = mix_seed(0xACCE97, static_cast<std::uint64_t>(trial));
        const Digraph d = generate(spec);
        const Verdict exact = decide_exact_via_matchings(d, 1'000'000);
        const bool truth = held_karp(d).hamiltonian;
        if (exact.kind != (truth ? VerdictKind::Hamiltonian : VerdictKind::NotHamiltonian)) {
            return {false, "disagreement on Gnp trial " + std::to_string(trial)};
        }
    }
    return {true, "4096 exhaustive + 5000 random instances agree"};
}

// Criterion 3: the built-in prism audit is internally consistent and
// reproducible; a confirmed discrepancy must shrink, archive, and drive the
// compare subcommand to exit code 2.
Outcome criterion3() {
    const Digraph d = prism();
    const ComparisonRecord rec = compare_one(d);
    if (!rec.oracle) return {false, "oracle skipped on n=6"};

    const bool flag_consistent =
        rec.discrepancy.has_value() &&
        (*rec.discrepancy == (rec.paper_verdict.kind == VerdictKind::ClaimedHamiltonian &&
                              !rec.oracle->hamiltonian));
    if (!flag_consistent) return {false, "discrepancy flag inconsistent with verdict pair"};

    const ComparisonRecord again = compare_one(d);
    if (record_to_json(rec).dump() != record_to_json(again).dump()) {
        return {false, "record not reproducible across runs"};
    }

    std::string note = "oracle says " +
                       std::string(rec.oracle->hamiltonian ? "Hamiltonian" : "non-Hamiltonian") +
                       ", pipeline says " + verdict_kind_name(rec.paper_verdict.kind);
    if (!rec.is_discrepant()) return {true, note + ", no discrepancy"};

    // The contested case: shrink must succeed and re-validate, the
    // campaign must archive it, and the CLI must exit 2.
    const ShrinkResult s = shrink(d);
    if (!compare_one(s.shrunk).is_discrepant()) {
        return {false, "shrunken instance lost the discrepancy"};
    }
    CampaignConfig config;
    config.family = Family::Prism;
    config.n_min = 6;
    config.n_max = 6;
    config.trials = 1;
    config.master_seed = 0;
    const CampaignReport report = fuzz_campaign(config);
    if (report.discrepancies.size() != 1) return {false, "campaign failed to archive"};
    const CampaignReport reloaded = report_from_json(report_to_json(report));
    if (!compare_one(reloaded.discrepancies[0].shrunk).is_discrepant()) {
        return {false, "archived instance does not re-validate"};
    }

    const char* cli = std::getenv("HCAUDIT_CLI");
    const char* prism_file = std::getenv("HCAUDIT_PRISM");
    if (!cli || !prism_file) {
        return {false, "HCAUDIT_CLI / HCAUDIT_PRISM not set; cannot check exit code"};
    }
    const std::string cmd =
        std::string(cli) + " compare " + prism_file + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 2) {
        return {false, "compare exit code " + std::to_string(exit_code) + ", expected 2"};
    }
    return {true, note + "; shrunk to " + std::to_string(s.shrunk.arc_count()) +
                      " arcs, archived, compare exits 2"};
}

// Criterion 4: component-counting rank == exact Gaussian elimination.
Outcome criterion4() {
    Rng rng(0xBA7E55);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const Digraph d = testsupport::random_digraph(rng, n, 0.2 + 0.6 * rng.unit());
        std::vector<int> members;
        for (int j = 0; j < d.arc_count(); ++j) {
            if (rng.chance(0.5)) members.push_back(j);
        }
        const ArcSet s = make_arcset(d, members);
        const int fast = rank_of_arcset(d, s).rank;
        const int exact = testsupport::exact_rank(testsupport::incidence_submatrix(d, s));
        if (fast != exact) {
            return {false, "trial " + std::to_string(trial) + ": " + std::to_string(fast) +
                               " vs " + std::to_string(exact)};
        }
    }
    return {true, "200 random digraphs, exact match"};
}

// Criterion 5: allowed_edges == union of all enumerated perfect matchings.
Outcome criterion5() {
    Rng rng(0xA110ED);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const BipartiteGraph g = testsupport::random_bipartite(rng, n, n, rng.unit());
        const AllowedEdgeSet a = allowed_edges(g);
        const EnumerationResult pms = enumerate_perfect_matchings(g, 1'000'000);
        if (pms.truncated) return {false, "enumeration truncated unexpectedly"};
        std::set<int> covered;
        for (const Matching& m : pms.matchings) {
            covered.insert(m.edges.begin(), m.edges.end());
        }
        if (a.members != std::vector<int>(covered.begin(), covered.end())) {
            return {false, "mismatch on trial " + std::to_string(trial)};
        }
        if (a.no_perfect_matching != pms.matchings.empty()) {
            return {false, "flag mismatch on trial " + std::to_string(trial)};
        }
    }
    return {true, "200 random balanced graphs, exact match"};
}

// Criterion 6: Hopcroft-Karp == exhaustive maximum; violators are literal.
Outcome criterion6() {
    Rng rng(0x6A11);
    for (int trial = 0; trial < 500; ++trial) {
        const int x = 1 + static_cast<int>(rng.below(6));
        const int y = 1 + static_cast<int>(rng.below(6));
        const BipartiteGraph g = testsupport::random_bipartite(rng, x, y, rng.unit());
        const int hk = max_matching(g).size();
        if (hk != testsupport::brute_max_matching(g)) {
            return {false, "cardinality mismatch on trial " + std::to_string(trial)};
        }
        const auto s = hall_violator(g);
        if (s.has_value() != (hk < x)) {
            return {false, "violator presence mismatch on trial " + std::to_string(trial)};
        }
        if (s) {
            std::set<int> neighborhood;
            for (int xv : *s) {
                for (int e : g.x_edges(xv)) neighborhood.insert(g.edge(e).second);
            }
            if (neighborhood.size() >= s->size()) {
                return {false, "violator not literal on trial " + std::to_string(trial)};
            }
        }
    }
    return {true, "500 random graphs"};
}

// Criterion 7: Z-map structure on random digraphs, permutation digraphs,
// and single cycles.
Outcome criterion7() {
    Rng rng(0x2A9);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng.below(13));
        const Digraph d = testsupport::random_digraph(rng, n, rng.unit());
        const BipartiteZMap z = build_zmap(d);
        if (z.x_size() != n || z.y_size() != n || z.edge_count() != d.arc_count()) {
            return {false, "size mismatch on trial " + std::to_string(trial)};
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(11));
        const std::vector<int> perm = testsupport::random_derangement(rng, n);
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i) arcs.emplace_back(i, perm[static_cast<std::size_t>(i)]);
        const Digraph d(n, std::move(arcs));
        const BipartiteZMap z = build_zmap(d);

        // the full edge image must itself be a perfect matching
        std::set<int> xs, ys;
        for (int e = 0; e < z.edge_count(); ++e) {
            xs.insert(z.edge(e).first);
            ys.insert(z.edge(e).second);
        }
        if (z.edge_count() != n || static_cast<int>(xs.size()) != n ||
            static_cast<int>(ys.size()) != n) {
            return {false, "image not a perfect matching on trial " + std::to_string(trial)};
        }
        const ArcSet cover = preimage(z, EdgeSet{full_arcset(d).members});
        std::vector<int> din(static_cast<std::size_t>(n), 0), dout(din);
        for (int j : cover.members) {
            dout[static_cast<std::size_t>(d.tail(j))]++;
            din[static_cast<std::size_t>(d.head(j))]++;
        }
        for (int v = 0; v < n; ++v) {
            if (din[static_cast<std::size_t>(v)] != 1 ||
                dout[static_cast<std::size_t>(v)] != 1) {
                return {false, "preimage degree != 1 on trial " + std::to_string(trial)};
            }
        }
    }
    for (int trial = 0; trial < 500; ++trial) {
        GenSpec spec;
        spec.family = Family::SingleCycle;
        spec.n = 2 + static_cast<int>(rng.below(11));
        spec.seed = rng.u64();
        const Digraph d = generate(spec);
        const BipartiteZMap z = build_zmap(d);
        const EnumerationResult pms = enumerate_perfect_matchings(to_bipartite(z), 2);
        if (pms.matchings.size() != 1) {
            return {false, "single cycle without unique PM on trial " + std::to_string(trial)};
        }
        const ArcSet back = preimage(z, EdgeSet{pms.matchings[0].edges});
        if (rank_of_arcset(d, back).rank != d.vertex_count() - 1) {
            return {false, "preimage rank != n-1 on trial " + std::to_string(trial)};
        }
    }
    return {true, "1000 + 1000 + 500 instances"};
}

// Criterion 8: decide_paper scaling on Gnp(p=0.3), slope <= 3.5 and the
// n=800 instance well under 10s.
Outcome criterion8() {
    const BenchResult bench = bench_scaling({100, 200, 400, 800}, 0.3, 0xBE4C, 5);
    if (!bench.loglog_slope) return {false, "no slope fitted"};
    const BenchRow& biggest = bench.rows.back();
    std::ostringstream note;
    note << "slope " << *bench.loglog_slope << ", n=800 mean " << biggest.mean_total_ms
         << " ms";
    if (*bench.loglog_slope > 3.5) return {false, note.str() + " (bound 3.5)"};
    if (biggest.mean_total_ms >= 10'000.0) return {false, note.str() + " (bound 10s)"};
    return {true, note.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "pipeline soundness, exhaustive n=4", criterion1},
        {2, "exact-decider equivalence", criterion2},
        {3, "prism audit: consistency, archive, exit code", criterion3},
        {4, "rank vs exact elimination", criterion4},
        {5, "allowed edges vs enumeration", criterion5},
        {6, "matching vs brute force, Hall violators", criterion6},
        {7, "Z-map structure", criterion7},
        {8, "scaling", criterion8},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const Outcome outcome = c.run();
        if (!outcome.pass) ++failures;
        std::cout << "criterion " << c.id << ": " << (outcome.pass ? "PASS" : "FAIL") << " — "
                  << c.name << " (" << outcome.note << ")" << std::endl;
    }
    return failures;
}
