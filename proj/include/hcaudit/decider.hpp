#pragma once

#include <cstdint>
#include <optional>

#include "hcaudit/digraph.hpp"
#include "hcaudit/matching.hpp"

namespace hcaudit {

enum class VerdictKind {
    NoPerfectMatching,   // Z(D) has no perfect matching: provably non-Hamiltonian
    RankDeficient,       // r(F^-1(C(G))) < n-1: provably non-Hamiltonian
    ClaimedHamiltonian,  // the pipeline's asserted "yes"; not independently verified
    Hamiltonian,         // exact decision, with witness
    NotHamiltonian,      // exact decision
    Unknown,             // enumeration budget exhausted without a witness
};

const char* verdict_kind_name(VerdictKind k);

struct Verdict {
    VerdictKind kind;
    std::optional<int> rank;
    std::optional<int> components;
    std::optional<ArcSet> witness;  // present iff kind == Hamiltonian
    std::optional<std::uint64_t> matchings_examined;
};

struct DecideOptions {
    /// When set, a non-strongly-connected input short-circuits to a correct
    /// NotHamiltonian before the pipeline runs. Off by default so the
    /// pipeline is measured unmodified.
    bool strong_connectivity_prefilter = false;
};

/// Wall-clock breakdown of one decide_paper run, milliseconds.
struct StageTimings {
    double zmap_ms = 0.0;
    double matching_ms = 0.0;
    double allowed_ms = 0.0;
    double rank_ms = 0.0;
    double total_ms = 0.0;
};

/// The pipeline under audit: Z(D) -> perfect matching test -> allowed
/// edges C(G) -> preimage rank. rank = n-1 yields ClaimedHamiltonian;
/// the negative verdicts are sound.
Verdict decide_paper(const Digraph& d, const DecideOptions& options = {});

Verdict decide_paper_timed(const Digraph& d, StageTimings& timings,
                           const DecideOptions& options = {});

/// Exact decision by perfect-matching enumeration: Hamiltonian iff some
/// perfect matching M of Z(D) has rank(F^-1(M)) = n-1, in which case the
/// preimage is the witness cycle. Unknown when `limit` matchings were
/// examined without a witness and more remain.
Verdict decide_exact_via_matchings(const Digraph& d, std::uint64_t limit = 1'000'000);

}  // namespace hcaudit
