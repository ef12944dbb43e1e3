#pragma once

#include <utility>
#include <vector>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

/// Subset of a bipartite graph's edges, stored as sorted unique indices.
struct EdgeSet {
    std::vector<int> members;

    bool operator==(const EdgeSet&) const = default;
};

/// The Z-mapping balanced bipartite graph of a digraph: an out-copy X and
/// in-copy Y of the vertex set, with arc (u, v) becoming edge (x_u, y_v).
/// The arc<->edge bijection F is the identity on indices, so the source
/// digraph is retained and the inverse mapping is total.
class BipartiteZMap {
public:
    explicit BipartiteZMap(Digraph source) : source_(std::move(source)) {}

    const Digraph& source() const noexcept { return source_; }

    int x_size() const noexcept { return source_.vertex_count(); }
    int y_size() const noexcept { return source_.vertex_count(); }
    int edge_count() const noexcept { return source_.arc_count(); }

    /// Edge j = (tail(arc j), head(arc j)).
    std::pair<int, int> edge(int j) const { return source_.arc(j); }

private:
    Digraph source_;
};

BipartiteZMap build_zmap(const Digraph& d);

/// F applied to an arc set: identical indices on the edge side.
EdgeSet image(const BipartiteZMap& z, const ArcSet& s);

/// F^-1 applied to an edge set: identical indices on the arc side.
ArcSet preimage(const BipartiteZMap& z, const EdgeSet& e);

}  // namespace hcaudit
