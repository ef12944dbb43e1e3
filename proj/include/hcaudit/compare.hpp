#pragma once

#include <cstdint>
#include <optional>

#include "hcaudit/decider.hpp"
#include "hcaudit/digraph.hpp"
#include "hcaudit/oracle.hpp"

namespace hcaudit {

struct Limits {
    std::uint64_t enumeration_limit = 1'000'000;
    int held_karp_max_n = kHeldKarpMaxN;
    std::uint64_t backtrack_node_budget = 100'000'000;
};

struct CompareTimings {
    double paper_ms = 0.0;
    double exact_ms = 0.0;
    double oracle_ms = 0.0;
};

/// One instance run through the pipeline, the exact enumerator, and the
/// ground-truth oracle. `discrepancy` is empty iff the oracle was skipped
/// (budget ran out beyond Held-Karp range); otherwise it flags the one
/// contested outcome: pipeline says ClaimedHamiltonian, oracle says no.
struct ComparisonRecord {
    Digraph instance;
    Verdict paper_verdict;
    Verdict exact_verdict;
    std::optional<OracleResult> oracle;  // empty = skipped
    std::uint64_t oracle_nodes = 0;      // backtracking only
    std::optional<bool> discrepancy;
    CompareTimings timings;

    bool is_discrepant() const { return discrepancy.has_value() && *discrepancy; }
};

/// Throws Error(SoundnessViolation) if a provably-negative pipeline
/// verdict meets a Hamiltonian oracle answer — that direction is a
/// theorem, so its failure is a defect, never a data point.
ComparisonRecord compare_one(const Digraph& d, const Limits& limits = {});

struct ShrinkResult {
    Digraph pre_compaction;  // 1-minimal arc set, original vertex labels
    Digraph shrunk;          // isolated vertices dropped, labels compacted
};

/// Greedy 1-minimal shrink of a discrepancy instance: removes arcs in
/// index order while the discrepancy persists, then drops unused vertices.
/// Throws Error(NotADiscrepancy) when d is not discrepant under `limits`.
ShrinkResult shrink(const Digraph& d, const Limits& limits = {});

}  // namespace hcaudit
