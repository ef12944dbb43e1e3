#pragma once

#include <cstdint>
#include <vector>

#include "hcaudit/compare.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/serialize.hpp"

namespace hcaudit {

struct CampaignConfig {
    Family family = Family::Gnp;
    int n_min = 4;
    int n_max = 8;
    int trials = 100;
    std::uint64_t master_seed = 0;
    double p = 0.35;                 // Gnp
    std::vector<int> cycle_lengths;  // DisjointCycles; empty = random partition per trial
    Limits limits;
};

/// Confusion counts over oracle-checked trials. true_pos + true_neg +
/// claimed_pos_oracle_neg + oracle_skipped = trials; no_pm and
/// rank_deficient break true_neg down by pipeline verdict.
struct CampaignTotals {
    std::uint64_t true_pos = 0;
    std::uint64_t true_neg = 0;
    std::uint64_t claimed_pos_oracle_neg = 0;
    std::uint64_t no_pm = 0;
    std::uint64_t rank_deficient = 0;
    std::uint64_t oracle_skipped = 0;
};

struct DiscrepancyEntry {
    int trial;
    std::uint64_t seed;
    Digraph instance;
    Digraph pre_compaction;  // 1-minimal shrink, original labels
    Digraph shrunk;          // compacted
    Verdict paper_verdict;
    OracleResult oracle;
};

struct CampaignReport {
    CampaignConfig config;
    CampaignTotals totals;
    std::vector<DiscrepancyEntry> discrepancies;
    double wall_ms = 0.0;
};

/// Runs `trials` independent instances. Trial i draws its generator state
/// from mix_seed(master_seed, i) and its n uniformly from [n_min, n_max],
/// so the outcome is a pure function of the config. Every discrepancy is
/// shrunk and archived.
CampaignReport fuzz_campaign(const CampaignConfig& config);

Json report_to_json(const CampaignReport& report, bool include_timings = false);
CampaignReport report_from_json(const Json& j);

}  // namespace hcaudit
