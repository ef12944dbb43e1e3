#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hcaudit/arclist.hpp"
#include "hcaudit/bench.hpp"
#include "hcaudit/campaign.hpp"
#include "hcaudit/compare.hpp"
#include "hcaudit/decider.hpp"
#include "hcaudit/errors.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/oracle.hpp"
#include "hcaudit/serialize.hpp"

namespace {

constexpr int kExitDiscrepancy = 2;

void parse_range(const std::string& text, int& lo, int& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        lo = hi = std::stoi(text);
    } else {
        lo = std::stoi(text.substr(0, pos));
        hi = std::stoi(text.substr(pos + 2));
    }
}

hcaudit::OracleResult run_oracle(const hcaudit::Digraph& d, std::uint64_t budget) {
    const int n = d.vertex_count();
    if (n < 2) return hcaudit::OracleResult{false, std::nullopt, hcaudit::OracleMethod::HeldKarp};
    if (n <= hcaudit::kHeldKarpMaxN) return hcaudit::held_karp(d);
    const hcaudit::BacktrackOutcome out = hcaudit::backtrack_hc(d, budget);
    if (!out.result) {
        throw hcaudit::Error(hcaudit::Errc::TooLarge,
                             "backtracking budget exhausted after " +
                                 std::to_string(out.nodes_expanded) + " nodes");
    }
    return *out.result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-cycle decision pipeline and audit harness"};
    app.require_subcommand(1);

    std::string file;
    std::uint64_t limit = 1'000'000;
    std::uint64_t budget = 100'000'000;
    bool timings = false;

    auto* decide = app.add_subcommand("decide", "Run the pipeline verdict on an arc-list file");
    decide->add_option("file", file, "arc-list input")->required();

    auto* oracle = app.add_subcommand("oracle", "Run the exact Hamiltonicity oracle");
    oracle->add_option("file", file, "arc-list input")->required();
    oracle->add_option("--budget", budget, "backtracking node budget (n > 24)");

    auto* exact = app.add_subcommand("exact", "Exact decision via matching enumeration");
    exact->add_option("file", file, "arc-list input")->required();
    exact->add_option("--limit", limit, "perfect-matching enumeration limit");

    auto* compare = app.add_subcommand(
        "compare", "Pipeline vs. oracle on one instance; exit 2 on discrepancy");
    compare->add_option("file", file, "arc-list input")->required();
    compare->add_option("--limit", limit, "perfect-matching enumeration limit");
    compare->add_flag("--timings", timings, "include wall-clock timings in the output");

    std::string family = "gnp";
    std::string n_range = "4..8";
    int trials = 100;
    std::uint64_t seed = 0;
    double p = 0.35;
    std::vector<int> lengths;
    std::string out_path;
    auto* fuzz = app.add_subcommand("fuzz", "Deterministic campaign; exit 2 if discrepancies");
    fuzz->add_option("--family", family,
                     "gnp | degree-bound-two | single-cycle | disjoint-cycles | prism")
        ->required();
    fuzz->add_option("--n", n_range, "vertex count or range A..B")->required();
    fuzz->add_option("--trials", trials)->required();
    fuzz->add_option("--seed", seed)->required();
    fuzz->add_option("--p", p, "arc probability (gnp)");
    fuzz->add_option("--lengths", lengths, "fixed cycle lengths (disjoint-cycles)");
    fuzz->add_option("--limit", limit, "perfect-matching enumeration limit");
    fuzz->add_option("--out", out_path, "write the report here instead of stdout");
    fuzz->add_flag("--timings", timings, "include wall-clock stats in the report");

    std::string pre_out;
    auto* shrink = app.add_subcommand("shrink", "1-minimal shrink of a discrepancy instance");
    shrink->add_option("file", file, "arc-list input")->required();
    shrink->add_option("--limit", limit, "perfect-matching enumeration limit");
    shrink->add_option("--pre-out", pre_out, "also write the pre-compaction instance here");

    std::vector<int> n_list;
    int repeats = 5;
    double bench_p = 0.3;
    auto* bench = app.add_subcommand("bench", "Scaling measurement; CSV to stdout");
    bench->add_option("--n-list", n_list, "ascending vertex counts")->required();
    bench->add_option("--p", bench_p, "arc probability");
    bench->add_option("--seed", seed);
    bench->add_option("--repeats", repeats);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*decide) {
            const hcaudit::Digraph d = hcaudit::read_arclist_file(file);
            std::cout << hcaudit::verdict_to_json(hcaudit::decide_paper(d)).dump(2) << '\n';
        } else if (*oracle) {
            const hcaudit::Digraph d = hcaudit::read_arclist_file(file);
            std::cout << hcaudit::oracle_to_json(run_oracle(d, budget)).dump(2) << '\n';
        } else if (*exact) {
            const hcaudit::Digraph d = hcaudit::read_arclist_file(file);
            std::cout << hcaudit::verdict_to_json(
                             hcaudit::decide_exact_via_matchings(d, limit))
                             .dump(2)
                      << '\n';
        } else if (*compare) {
            const hcaudit::Digraph d = hcaudit::read_arclist_file(file);
            hcaudit::Limits limits;
            limits.enumeration_limit = limit;
            const hcaudit::ComparisonRecord rec = hcaudit::compare_one(d, limits);
            std::cout << hcaudit::record_to_json(rec, timings).dump(2) << '\n';
            return rec.is_discrepant() ? kExitDiscrepancy : 0;
        } else if (*fuzz) {
            hcaudit::CampaignConfig config;
            config.family = hcaudit::family_from_name(family);
            parse_range(n_range, config.n_min, config.n_max);
            config.trials = trials;
            config.master_seed = seed;
            config.p = p;
            config.cycle_lengths = lengths;
            config.limits.enumeration_limit = limit;
            const hcaudit::CampaignReport report = hcaudit::fuzz_campaign(config);
            const std::string text = hcaudit::report_to_json(report, timings).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw hcaudit::Error(hcaudit::Errc::BadReport,
                                               "cannot open '" + out_path + "' for writing");
                out << text;
            }
            return report.discrepancies.empty() ? 0 : kExitDiscrepancy;
        } else if (*shrink) {
            const hcaudit::Digraph d = hcaudit::read_arclist_file(file);
            hcaudit::Limits limits;
            limits.enumeration_limit = limit;
            const hcaudit::ShrinkResult result = hcaudit::shrink(d, limits);
            if (!pre_out.empty()) hcaudit::write_arclist_file(result.pre_compaction, pre_out);
            std::cout << hcaudit::emit_arclist(result.shrunk);
        } else if (*bench) {
            std::cout << hcaudit::bench_to_csv(
                hcaudit::bench_scaling(n_list, bench_p, seed, repeats));
        }
    } catch (const hcaudit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
