#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hcaudit/zmap.hpp"

namespace hcaudit {

/// Bipartite graph with sides X and Y and an ordered edge list; edge j is
/// identified by its list position. No duplicate edges.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Throws Error(VertexOutOfRange / DuplicateEdge) on invalid input.
    BipartiteGraph(int x_size, int y_size, std::vector<std::pair<int, int>> edges);

    int x_size() const noexcept { return x_size_; }
    int y_size() const noexcept { return y_size_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    std::pair<int, int> edge(int j) const { return edges_[static_cast<std::size_t>(j)]; }

    /// Edge indices incident to an X vertex, ascending.
    const std::vector<int>& x_edges(int x) const { return x_adj_[static_cast<std::size_t>(x)]; }

private:
    int x_size_ = 0;
    int y_size_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> x_adj_;
};

/// Lossless view of a Z-mapping graph as a plain bipartite graph.
BipartiteGraph to_bipartite(const BipartiteZMap& z);

/// Matching as a sorted set of pairwise endpoint-disjoint edge indices.
struct Matching {
    std::vector<int> edges;

    int size() const noexcept { return static_cast<int>(edges.size()); }
    bool operator==(const Matching&) const = default;
};

/// Maximum-cardinality matching by Hopcroft-Karp. Deterministic: phases
/// scan X vertices and adjacency in index order.
Matching max_matching(const BipartiteGraph& g);

/// Empty when some matching saturates X; otherwise a set S of X vertices
/// with |N(S)| < |S|, read off the final Hopcroft-Karp layering.
std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g);

struct AllowedEdgeSet {
    std::vector<int> members;             // edges lying in some perfect matching
    bool no_perfect_matching = false;     // set iff members is empty for lack of any PM
};

/// Exact allowed-edge set (the matching-covered subgraph): one perfect
/// matching plus strongly connected components of the alternating
/// orientation. Throws Error(NotBalanced) when |X| != |Y|.
AllowedEdgeSet allowed_edges(const BipartiteGraph& g);

/// Same, reusing an already-computed maximum matching of g.
AllowedEdgeSet allowed_edges_with_matching(const BipartiteGraph& g, const Matching& m);

struct EnumerationResult {
    std::vector<Matching> matchings;
    bool truncated = false;  // set iff more than `limit` perfect matchings exist
};

/// All perfect matchings by canonical backtracking over X in index order,
/// yielding at most `limit` (>= 1). Deterministic output order.
EnumerationResult enumerate_perfect_matchings(const BipartiteGraph& g, std::uint64_t limit);

/// Streaming core of the enumeration: invokes fn on each perfect matching
/// in canonical order until fn returns false or the search space is
/// exhausted. Returns false iff stopped by fn.
bool for_each_perfect_matching(const BipartiteGraph& g,
                               const std::function<bool(const Matching&)>& fn);

}  // namespace hcaudit
