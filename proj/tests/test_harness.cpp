#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hcaudit/bench.hpp"
#include "hcaudit/campaign.hpp"
#include "hcaudit/compare.hpp"
#include "hcaudit/errors.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/incidence.hpp"
#include "hcaudit/matching.hpp"
#include "hcaudit/oracle.hpp"
#include "hcaudit/serialize.hpp"

using namespace hcaudit;

TEST_CASE("generation is a pure function of the spec") {
    GenSpec spec;
    spec.family = Family::Gnp;
    spec.n = 9;
    spec.p = 0.4;
    spec.seed = 123456789;
    CHECK(generate(spec) == generate(spec));

    spec.seed = 123456790;
    CHECK_FALSE(generate(spec) == generate(GenSpec{Family::Gnp, 9, 123456789, 0.4, {}, {}}));
}

TEST_CASE("gnp degenerate probabilities") {
    CHECK(generate(GenSpec{Family::Gnp, 4, 7, 1.0, {}, {}}).arc_count() == 12);
    CHECK(generate(GenSpec{Family::Gnp, 5, 7, 0.0, {}, {}}).arc_count() == 0);
    CHECK_THROWS_AS(generate(GenSpec{Family::Gnp, 4, 7, 1.5, {}, {}}), Error);
    CHECK_THROWS_AS(generate(GenSpec{Family::Gnp, 4, 7, -0.1, {}, {}}), Error);
}

TEST_CASE("degree-bound-two stays within its bounds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = generate(GenSpec{Family::DegreeBoundTwo, 12, seed, 0.0, {}, {}});
        for (int v = 0; v < d.vertex_count(); ++v) {
            CHECK(d.out_degree(v) <= 2);
            CHECK(d.in_degree(v) <= 2);
        }
    }
}

TEST_CASE("single-cycle instances are hamiltonian cycles") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = generate(GenSpec{Family::SingleCycle, 7, seed, 0.0, {}, {}});
        CHECK(classify_arcset(d, full_arcset(d)) == CycleClass::HamiltonianCycle);
    }
    CHECK_THROWS_AS(generate(GenSpec{Family::SingleCycle, 1, 0, 0.0, {}, {}}), Error);
}

TEST_CASE("disjoint-cycles validates its lengths") {
    const Digraph d = generate(GenSpec{Family::DisjointCycles, 7, 3, 0.0, {3, 4}, {}});
    CHECK(d.arc_count() == 7);
    CHECK(classify_arcset(d, full_arcset(d)) == CycleClass::Cycle);
    CHECK_THROWS_AS(generate(GenSpec{Family::DisjointCycles, 7, 3, 0.0, {3, 3}, {}}), Error);
    CHECK_THROWS_AS(generate(GenSpec{Family::DisjointCycles, 3, 3, 0.0, {1, 2}, {}}), Error);
}

TEST_CASE("the prism's cycle covers are the triangle pair and the rung pairs") {
    const Digraph d = prism();
    REQUIRE(d.vertex_count() == 6);
    REQUIRE(d.arc_count() == 12);

    const BipartiteZMap z = build_zmap(d);
    const EnumerationResult pms = enumerate_perfect_matchings(to_bipartite(z), 100);
    REQUIRE(pms.matchings.size() == 2);
    CHECK_FALSE(pms.truncated);
    // arcs 0..5 are the two triangles, 6..11 the symmetric rungs
    CHECK(pms.matchings[0].edges == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(pms.matchings[1].edges == std::vector<int>{6, 7, 8, 9, 10, 11});

    const AllowedEdgeSet allowed = allowed_edges(to_bipartite(z));
    CHECK(allowed.members.size() == 12);
    CHECK(rank_of_arcset(d, preimage(z, EdgeSet{allowed.members})).rank == 5);

    CHECK_FALSE(held_karp(d).hamiltonian);
}

TEST_CASE("compare_one fixed examples") {
    const ComparisonRecord tri = compare_one(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(tri.paper_verdict.kind == VerdictKind::ClaimedHamiltonian);
    CHECK(tri.oracle->hamiltonian);
    CHECK(tri.discrepancy == false);

    const ComparisonRecord pairs = compare_one(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
    CHECK(pairs.paper_verdict.kind == VerdictKind::RankDeficient);
    CHECK_FALSE(pairs.oracle->hamiltonian);
    CHECK(pairs.discrepancy == false);

    const ComparisonRecord p = compare_one(prism());
    CHECK(p.paper_verdict.kind == VerdictKind::ClaimedHamiltonian);
    CHECK_FALSE(p.oracle->hamiltonian);
    CHECK(p.discrepancy == true);
    CHECK(p.exact_verdict.kind == VerdictKind::NotHamiltonian);
}

TEST_CASE("single-cycle campaigns are all true positives") {
    CampaignConfig config;
    config.family = Family::SingleCycle;
    config.n_min = 5;
    config.n_max = 8;
    config.trials = 100;
    config.master_seed = 42;
    const CampaignReport report = fuzz_campaign(config);
    CHECK(report.totals.true_pos == 100);
    CHECK(report.totals.claimed_pos_oracle_neg == 0);
    CHECK(report.discrepancies.empty());
}

TEST_CASE("disjoint 2-cycles campaigns are all rank deficient") {
    CampaignConfig config;
    config.family = Family::DisjointCycles;
    config.cycle_lengths = {2, 2};
    config.n_min = 4;
    config.n_max = 4;
    config.trials = 10;
    config.master_seed = 1;
    const CampaignReport report = fuzz_campaign(config);
    CHECK(report.totals.rank_deficient == 10);
    CHECK(report.totals.true_neg == 10);
}

TEST_CASE("campaign totals partition the trials") {
    CampaignConfig config;
    config.family = Family::Gnp;
    config.n_min = 4;
    config.n_max = 7;
    config.trials = 300;
    config.master_seed = 2024;
    config.p = 0.3;
    const CampaignReport report = fuzz_campaign(config);
    const CampaignTotals& t = report.totals;
    CHECK(t.true_pos + t.true_neg + t.claimed_pos_oracle_neg + t.oracle_skipped ==
          static_cast<std::uint64_t>(config.trials));
    CHECK(t.no_pm + t.rank_deficient <= t.true_neg);
    CHECK(static_cast<std::uint64_t>(report.discrepancies.size()) ==
          t.claimed_pos_oracle_neg);
}

TEST_CASE("campaign reports are byte-identical across runs") {
    CampaignConfig config;
    config.family = Family::Gnp;
    config.n_min = 4;
    config.n_max = 6;
    config.trials = 50;
    config.master_seed = 777;
    config.p = 0.4;
    const std::string a = report_to_json(fuzz_campaign(config)).dump(2);
    const std::string b = report_to_json(fuzz_campaign(config)).dump(2);
    CHECK(a == b);
}

TEST_CASE("archived discrepancies re-validate after a JSON round trip") {
    CampaignConfig config;
    config.family = Family::Prism;
    config.n_min = 6;
    config.n_max = 6;
    config.trials = 3;
    config.master_seed = 5;
    const CampaignReport report = fuzz_campaign(config);
    REQUIRE(report.discrepancies.size() == 3);

    const Json j = report_to_json(report);
    const CampaignReport reloaded = report_from_json(j);
    REQUIRE(reloaded.discrepancies.size() == 3);
    for (const DiscrepancyEntry& e : reloaded.discrepancies) {
        CHECK(compare_one(e.instance).is_discrepant());
        CHECK(compare_one(e.pre_compaction).is_discrepant());
        CHECK(compare_one(e.shrunk).is_discrepant());
        CHECK(e.paper_verdict.kind == VerdictKind::ClaimedHamiltonian);
        CHECK_FALSE(e.oracle.hamiltonian);
    }
    CHECK(report_to_json(reloaded).dump() == j.dump());
}

TEST_CASE("shrink leaves a 1-minimal discrepant instance") {
    const ShrinkResult s = shrink(prism());
    CHECK(s.pre_compaction == prism());  // already minimal
    CHECK(s.shrunk == prism());

    CHECK_THROWS_AS(shrink(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})), Error);
}

TEST_CASE("shrink strips decorations back to a small witness") {
    // Pad the prism with extra arcs that keep the discrepancy alive. Only
    // triangle-arc reversals survive individually, and two reversals in the
    // same triangle create a Hamiltonian cycle, so at most two arcs can be
    // added; take every one the greedy scan accepts.
    const Digraph base = prism();
    std::vector<Arc> arcs = base.arcs();
    int added = 0;
    for (int u = 0; u < 6; ++u) {
        for (int v = 0; v < 6; ++v) {
            if (u == v || base.has_arc(u, v)) continue;
            std::vector<Arc> candidate = arcs;
            candidate.emplace_back(u, v);
            const Digraph padded(6, candidate);
            if (compare_one(padded).is_discrepant()) {
                arcs = candidate;
                ++added;
            }
        }
    }
    REQUIRE(added == 2);
    const Digraph padded(6, arcs);
    REQUIRE(padded.arc_count() == 14);

    const ShrinkResult s = shrink(padded);
    CHECK(s.shrunk.arc_count() <= 15);
    CHECK(compare_one(s.shrunk).is_discrepant());

    // 1-minimality: no single arc removal preserves the discrepancy
    for (int j = 0; j < s.pre_compaction.arc_count(); ++j) {
        std::vector<Arc> fewer;
        for (int k = 0; k < s.pre_compaction.arc_count(); ++k) {
            if (k != j) fewer.push_back(s.pre_compaction.arc(k));
        }
        const Digraph reduced(s.pre_compaction.vertex_count(), fewer);
        CHECK_FALSE(compare_one(reduced).is_discrepant());
    }
}

TEST_CASE("bench handles single sizes and empty graphs") {
    const BenchResult one = bench_scaling({30}, 0.3, 9, 2);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].n == 30);
    CHECK_FALSE(one.loglog_slope.has_value());

    const BenchResult empty = bench_scaling({20, 40}, 0.0, 9, 1);
    CHECK(empty.rows[0].arcs == 0);

    const std::string csv = bench_to_csv(one);
    CHECK(csv.find("n,arcs,mean_total_ms") == 0);

    CHECK_THROWS_AS(bench_scaling({40, 20}, 0.3, 9, 1), Error);
}

TEST_CASE("record JSON marks skipped oracles and timing opt-in") {
    const ComparisonRecord rec = compare_one(prism());
    const Json plain = record_to_json(rec);
    CHECK_FALSE(plain.contains("timings"));
    CHECK(plain.at("oracle_skipped") == false);
    CHECK(plain.at("discrepancy") == true);

    const Json timed = record_to_json(rec, true);
    CHECK(timed.contains("timings"));

    // identical runs serialize identically without timings
    CHECK(record_to_json(compare_one(prism())).dump() == plain.dump());
}
