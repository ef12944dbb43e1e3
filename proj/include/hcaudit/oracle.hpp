#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

enum class OracleMethod { HeldKarp, Backtracking };

const char* oracle_method_name(OracleMethod m);

struct OracleResult {
    bool hamiltonian;
    /// Vertex sequence of length n starting at 0; consecutive pairs and the
    /// wrap-around pair are all arcs of the input. Present iff hamiltonian.
    std::optional<std::vector<int>> witness;
    OracleMethod method;
};

/// Held-Karp maximum n; beyond this the DP table no longer fits sensibly.
inline constexpr int kHeldKarpMaxN = 24;

/// Exact Hamiltonicity via subset DP anchored at vertex 0.
/// Throws Error(TooSmall) for n < 2 and Error(TooLarge) for n > 24.
OracleResult held_karp(const Digraph& d);

struct BacktrackOutcome {
    /// Empty when the node budget ran out before the search finished.
    std::optional<OracleResult> result;
    std::uint64_t nodes_expanded = 0;
};

/// Depth-first witness search with lowest-index-first successor order,
/// pruned by an up-front strong-connectivity check and by degree forcing
/// on the unvisited remainder. Exact whenever it finishes within budget.
BacktrackOutcome backtrack_hc(const Digraph& d, std::uint64_t node_budget);

/// Each undirected edge {u, v} becomes the symmetric arc pair (u, v), (v, u)
/// in edge order. Throws Error(SelfLoop / DuplicateEdge / VertexOutOfRange).
Digraph undirected_to_digraph(const std::vector<std::pair<int, int>>& edges, int n);

/// Arc indices of a vertex-sequence witness, for classify_arcset checks.
ArcSet witness_arcs(const Digraph& d, const std::vector<int>& cycle);

}  // namespace hcaudit
