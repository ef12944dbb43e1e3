#include "hcaudit/zmap.hpp"

#include <string>

#include "hcaudit/errors.hpp"

namespace hcaudit {

BipartiteZMap build_zmap(const Digraph& d) { return BipartiteZMap(d); }

namespace {
void check_indices(const std::vector<int>& members, int count) {
    for (int j : members) {
        if (j < 0 || j >= count) {
            throw Error(Errc::VertexOutOfRange,
                        "index " + std::to_string(j) + " outside [0, " + std::to_string(count) +
                            ")");
        }
    }
}
}  // namespace

EdgeSet image(const BipartiteZMap& z, const ArcSet& s) {
    check_indices(s.members, z.edge_count());
    return EdgeSet{s.members};
}

ArcSet preimage(const BipartiteZMap& z, const EdgeSet& e) {
    check_indices(e.members, z.edge_count());
    return ArcSet{e.members};
}

}  // namespace hcaudit
