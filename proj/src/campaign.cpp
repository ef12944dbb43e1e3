#include "hcaudit/campaign.hpp"

#include <chrono>

#include "hcaudit/errors.hpp"
#include "hcaudit/rng.hpp"

namespace hcaudit {

namespace {

/// Deterministic partition of n into cycle lengths >= 2.
std::vector<int> random_partition(int n, Rng& rng) {
    std::vector<int> lengths;
    int remaining = n;
    while (remaining >= 2) {
        int part = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining - 1)));
        if (remaining - part == 1) part += 1;  // never strand a single vertex
        lengths.push_back(part);
        remaining -= part;
    }
    return lengths;
}

GenSpec trial_spec(const CampaignConfig& config, int trial) {
    const std::uint64_t trial_seed = mix_seed(config.master_seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    GenSpec spec;
    spec.family = config.family;
    spec.p = config.p;
    const int span = config.n_max - config.n_min + 1;
    spec.n = config.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    if (config.family == Family::Prism) spec.n = 6;
    if (config.family == Family::DisjointCycles) {
        spec.cycle_lengths = config.cycle_lengths.empty() ? random_partition(spec.n, rng)
                                                          : config.cycle_lengths;
        int total = 0;
        for (int len : spec.cycle_lengths) total += len;
        spec.n = total;
    }
    spec.seed = rng.u64();
    return spec;
}

}  // namespace

CampaignReport fuzz_campaign(const CampaignConfig& config) {
    if (config.trials < 1) throw Error(Errc::InfeasibleSpec, "trials must be >= 1");
    if (config.n_min > config.n_max || config.n_min < 0) {
        throw Error(Errc::InfeasibleSpec, "need 0 <= n_min <= n_max");
    }
    if (config.family == Family::FromFile) {
        throw Error(Errc::InfeasibleSpec, "fuzzing needs a generative family");
    }
    if ((config.family == Family::SingleCycle || config.family == Family::DisjointCycles) &&
        config.n_min < 2) {
        throw Error(Errc::InfeasibleSpec, "cycle families need n_min >= 2");
    }

    const auto t0 = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = config;

    for (int trial = 0; trial < config.trials; ++trial) {
        const GenSpec spec = trial_spec(config, trial);
        const Digraph d = generate(spec);
        const ComparisonRecord rec = compare_one(d, config.limits);

        if (!rec.oracle) {
            report.totals.oracle_skipped++;
            continue;
        }
        switch (rec.paper_verdict.kind) {
            case VerdictKind::ClaimedHamiltonian:
                if (rec.oracle->hamiltonian) {
                    report.totals.true_pos++;
                } else {
                    report.totals.claimed_pos_oracle_neg++;
                    const ShrinkResult s = shrink(d, config.limits);
                    report.discrepancies.push_back(DiscrepancyEntry{
                        trial, spec.seed, d, s.pre_compaction, s.shrunk,
                        rec.paper_verdict, *rec.oracle});
                }
                break;
            case VerdictKind::NoPerfectMatching:
                report.totals.no_pm++;
                report.totals.true_neg++;
                break;
            case VerdictKind::RankDeficient:
                report.totals.rank_deficient++;
                report.totals.true_neg++;
                break;
            default:
                // decide_paper only returns NotHamiltonian outside the kinds
                // above, and only for n < 2.
                report.totals.true_neg++;
                break;
        }
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

namespace {

Json limits_to_json(const Limits& limits) {
    return Json{{"enumeration_limit", limits.enumeration_limit},
                {"held_karp_max_n", limits.held_karp_max_n},
                {"backtrack_node_budget", limits.backtrack_node_budget}};
}

Limits limits_from_json(const Json& j) {
    Limits limits;
    limits.enumeration_limit = j.at("enumeration_limit").get<std::uint64_t>();
    limits.held_karp_max_n = j.at("held_karp_max_n").get<int>();
    limits.backtrack_node_budget = j.at("backtrack_node_budget").get<std::uint64_t>();
    return limits;
}

}  // namespace

Json report_to_json(const CampaignReport& report, bool include_timings) {
    const CampaignConfig& c = report.config;
    Json config{{"family", family_name(c.family)},
                {"n_min", c.n_min},
                {"n_max", c.n_max},
                {"trials", c.trials},
                {"seed", c.master_seed},
                {"p", c.p},
                {"cycle_lengths", c.cycle_lengths},
                {"limits", limits_to_json(c.limits)}};

    const CampaignTotals& t = report.totals;
    Json totals{{"true_pos", t.true_pos},
                {"true_neg", t.true_neg},
                {"claimed_pos_oracle_neg", t.claimed_pos_oracle_neg},
                {"no_pm", t.no_pm},
                {"rank_deficient", t.rank_deficient},
                {"oracle_skipped", t.oracle_skipped}};

    Json discrepancies = Json::array();
    for (const DiscrepancyEntry& e : report.discrepancies) {
        discrepancies.push_back(Json{{"trial", e.trial},
                                     {"seed", e.seed},
                                     {"instance", digraph_to_json(e.instance)},
                                     {"pre_compaction", digraph_to_json(e.pre_compaction)},
                                     {"shrunk", digraph_to_json(e.shrunk)},
                                     {"paper_verdict", verdict_to_json(e.paper_verdict)},
                                     {"oracle", oracle_to_json(e.oracle)}});
    }

    Json j{{"config", std::move(config)},
           {"totals", std::move(totals)},
           {"discrepancies", std::move(discrepancies)}};
    if (include_timings) j["wall_ms"] = report.wall_ms;
    return j;
}

CampaignReport report_from_json(const Json& j) {
    CampaignReport report;
    const Json& config = j.at("config");
    report.config.family = family_from_name(config.at("family").get<std::string>());
    report.config.n_min = config.at("n_min").get<int>();
    report.config.n_max = config.at("n_max").get<int>();
    report.config.trials = config.at("trials").get<int>();
    report.config.master_seed = config.at("seed").get<std::uint64_t>();
    report.config.p = config.at("p").get<double>();
    report.config.cycle_lengths = config.at("cycle_lengths").get<std::vector<int>>();
    report.config.limits = limits_from_json(config.at("limits"));

    const Json& totals = j.at("totals");
    report.totals.true_pos = totals.at("true_pos").get<std::uint64_t>();
    report.totals.true_neg = totals.at("true_neg").get<std::uint64_t>();
    report.totals.claimed_pos_oracle_neg =
        totals.at("claimed_pos_oracle_neg").get<std::uint64_t>();
    report.totals.no_pm = totals.at("no_pm").get<std::uint64_t>();
    report.totals.rank_deficient = totals.at("rank_deficient").get<std::uint64_t>();
    report.totals.oracle_skipped = totals.at("oracle_skipped").get<std::uint64_t>();

    for (const Json& e : j.at("discrepancies")) {
        report.discrepancies.push_back(DiscrepancyEntry{
            e.at("trial").get<int>(), e.at("seed").get<std::uint64_t>(),
            digraph_from_json(e.at("instance")), digraph_from_json(e.at("pre_compaction")),
            digraph_from_json(e.at("shrunk")), verdict_from_json(e.at("paper_verdict")),
            oracle_from_json(e.at("oracle"))});
    }
    if (j.contains("wall_ms")) report.wall_ms = j.at("wall_ms").get<double>();
    return report;
}

}  // namespace hcaudit
