#include "hcaudit/incidence.hpp"

#include <string>

#include "hcaudit/disjoint_set.hpp"
#include "hcaudit/errors.hpp"

namespace hcaudit {

IncidenceMatrix incidence_matrix(const Digraph& d) {
    return IncidenceMatrix(d.vertex_count(), d.arcs());
}

RankInfo rank_of_arcset(const Digraph& d, const ArcSet& s) {
    DisjointSet dsu(d.vertex_count());
    for (int j : s.members) {
        if (j < 0 || j >= d.arc_count()) {
            throw Error(Errc::VertexOutOfRange,
                        "arc index " + std::to_string(j) + " does not belong to the digraph");
        }
        dsu.unite(d.tail(j), d.head(j));
    }
    const int k = dsu.components();
    return RankInfo{d.vertex_count() - k, k};
}

}  // namespace hcaudit
