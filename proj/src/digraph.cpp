#include "hcaudit/digraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hcaudit/disjoint_set.hpp"
#include "hcaudit/errors.hpp"

namespace hcaudit {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) {
        throw Error(Errc::VertexOutOfRange, "vertex count must be nonnegative");
    }
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    std::unordered_set<long long> seen;
    seen.reserve(arcs_.size() * 2);
    for (std::size_t j = 0; j < arcs_.size(); ++j) {
        const auto [u, v] = arcs_[j];
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw Error(Errc::VertexOutOfRange,
                        "arc " + std::to_string(j) + " references vertex outside [0, " +
                            std::to_string(n_) + ")");
        }
        if (u == v) {
            throw Error(Errc::SelfLoop, "arc " + std::to_string(j) + " is a self-loop");
        }
        const long long key = static_cast<long long>(u) * n_ + v;
        if (!seen.insert(key).second) {
            throw Error(Errc::DuplicateArc,
                        "arc " + std::to_string(j) + " duplicates (" + std::to_string(u) +
                            ", " + std::to_string(v) + ")");
        }
        out_[static_cast<std::size_t>(u)].push_back(static_cast<int>(j));
        in_[static_cast<std::size_t>(v)].push_back(static_cast<int>(j));
    }
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    for (int j : out_[static_cast<std::size_t>(u)]) {
        if (arcs_[static_cast<std::size_t>(j)].second == v) return true;
    }
    return false;
}

ArcSet make_arcset(const Digraph& d, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int j : members) {
        if (j < 0 || j >= d.arc_count()) {
            throw Error(Errc::VertexOutOfRange,
                        "arc index " + std::to_string(j) + " outside [0, " +
                            std::to_string(d.arc_count()) + ")");
        }
    }
    return ArcSet{std::move(members)};
}

ArcSet full_arcset(const Digraph& d) {
    std::vector<int> all(static_cast<std::size_t>(d.arc_count()));
    for (int j = 0; j < d.arc_count(); ++j) all[static_cast<std::size_t>(j)] = j;
    return ArcSet{std::move(all)};
}

std::optional<int> bowtie(const Digraph& d, int i, int j) {
    if (i == j) return std::nullopt;
    if (d.head(i) == d.tail(j)) return d.head(i);
    return std::nullopt;
}

CycleClass classify_arcset(const Digraph& d, const ArcSet& s) {
    if (s.members.empty()) return CycleClass::NotCycle;

    const int n = d.vertex_count();
    std::vector<int> in_deg(static_cast<std::size_t>(n), 0);
    std::vector<int> out_deg(static_cast<std::size_t>(n), 0);
    for (int j : s.members) {
        out_deg[static_cast<std::size_t>(d.tail(j))]++;
        in_deg[static_cast<std::size_t>(d.head(j))]++;
    }
    int touched = 0;
    for (int v = 0; v < n; ++v) {
        const int din = in_deg[static_cast<std::size_t>(v)];
        const int dout = out_deg[static_cast<std::size_t>(v)];
        if (din == 0 && dout == 0) continue;
        if (din != 1 || dout != 1) return CycleClass::NotCycle;
        ++touched;
    }

    // Every touched vertex has in = out = 1, so s is a disjoint union of
    // directed cycles; count them via the weak components it spans.
    DisjointSet dsu(n);
    for (int j : s.members) dsu.unite(d.tail(j), d.head(j));
    std::vector<char> root_seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int v = 0; v < n; ++v) {
        if (in_deg[static_cast<std::size_t>(v)] == 0) continue;
        const int r = dsu.find(v);
        if (!root_seen[static_cast<std::size_t>(r)]) {
            root_seen[static_cast<std::size_t>(r)] = 1;
            ++cycles;
        }
    }
    if (cycles > 1) return CycleClass::Cycle;
    if (touched == n && n >= 2) return CycleClass::HamiltonianCycle;
    return CycleClass::SimpleCycle;
}

const char* cycle_class_name(CycleClass c) {
    switch (c) {
        case CycleClass::NotCycle: return "NotCycle";
        case CycleClass::Cycle: return "Cycle";
        case CycleClass::SimpleCycle: return "SimpleCycle";
        case CycleClass::HamiltonianCycle: return "HamiltonianCycle";
    }
    return "?";
}

}  // namespace hcaudit
