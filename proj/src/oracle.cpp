#include "hcaudit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "hcaudit/errors.hpp"
#include "hcaudit/scc.hpp"

namespace hcaudit {

const char* oracle_method_name(OracleMethod m) {
    return m == OracleMethod::HeldKarp ? "HeldKarp" : "Backtracking";
}

OracleResult held_karp(const Digraph& d) {
    const int n = d.vertex_count();
    if (n < 2) throw Error(Errc::TooSmall, "held_karp requires n >= 2");
    if (n > kHeldKarpMaxN) {
        throw Error(Errc::TooLarge,
                    "held_karp limited to n <= " + std::to_string(kHeldKarpMaxN) + ", got " +
                        std::to_string(n));
    }

    std::vector<std::uint32_t> succ(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> pred(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : d.arcs()) {
        succ[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        pred[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }

    // ends[mask] = set of v such that some 0 -> v path visits exactly mask.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[1] = 1;  // the trivial path at vertex 0
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t reach = ends[mask];
        if (reach == 0 || !(mask & 1)) continue;
        for (int v = 0; v < n; ++v) {
            if (!(reach >> v & 1)) continue;
            std::uint32_t ext = succ[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }

    const std::uint32_t closers = ends[full] & pred[0] & ~std::uint32_t{1};
    if (closers == 0) {
        return OracleResult{false, std::nullopt, OracleMethod::HeldKarp};
    }

    // Reconstruct one cycle, lowest-index choices first.
    std::vector<int> rev;
    int v = std::countr_zero(closers);
    std::uint32_t mask = full;
    while (v != 0) {
        rev.push_back(v);
        const std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << v);
        const std::uint32_t cand = ends[prev_mask] & pred[static_cast<std::size_t>(v)];
        v = std::countr_zero(cand);
        mask = prev_mask;
    }
    rev.push_back(0);
    std::reverse(rev.begin(), rev.end());
    return OracleResult{true, std::move(rev), OracleMethod::HeldKarp};
}

namespace {

struct Backtracker {
    const Digraph& d;
    const std::uint64_t budget;
    int n;
    std::vector<std::vector<int>> succ;  // neighbor vertices, ascending
    std::vector<std::vector<int>> pred;
    std::vector<char> visited;
    std::vector<int> path;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    explicit Backtracker(const Digraph& graph, std::uint64_t node_budget)
        : d(graph), budget(node_budget), n(graph.vertex_count()) {
        succ.resize(static_cast<std::size_t>(n));
        pred.resize(static_cast<std::size_t>(n));
        for (const auto& [u, v] : d.arcs()) {
            succ[static_cast<std::size_t>(u)].push_back(v);
            pred[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& s : succ) std::sort(s.begin(), s.end());
        for (auto& p : pred) std::sort(p.begin(), p.end());
        visited.assign(static_cast<std::size_t>(n), 0);
    }

    // Every unvisited vertex must still be enterable (from the path end or
    // another unvisited vertex) and exitable (to vertex 0 or another
    // unvisited vertex); otherwise this branch is dead.
    bool feasible(int path_end) const {
        for (int w = 0; w < n; ++w) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            bool exit_ok = false;
            for (int x : succ[static_cast<std::size_t>(w)]) {
                if (x == 0 || !visited[static_cast<std::size_t>(x)]) {
                    exit_ok = true;
                    break;
                }
            }
            if (!exit_ok) return false;
            bool enter_ok = false;
            for (int x : pred[static_cast<std::size_t>(w)]) {
                if (x == path_end || !visited[static_cast<std::size_t>(x)]) {
                    enter_ok = true;
                    break;
                }
            }
            if (!enter_ok) return false;
        }
        return true;
    }

    bool search(int v) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        visited[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        if (static_cast<int>(path.size()) == n) {
            if (d.has_arc(v, 0)) return true;
        } else if (feasible(v)) {
            for (int w : succ[static_cast<std::size_t>(v)]) {
                if (visited[static_cast<std::size_t>(w)]) continue;
                if (search(w)) return true;
                if (out_of_budget) break;
            }
        }
        path.pop_back();
        visited[static_cast<std::size_t>(v)] = 0;
        return false;
    }
};

}  // namespace

BacktrackOutcome backtrack_hc(const Digraph& d, std::uint64_t node_budget) {
    const int n = d.vertex_count();
    if (n < 2) throw Error(Errc::TooSmall, "backtrack_hc requires n >= 2");
    if (!strongly_connected(d)) {
        return BacktrackOutcome{OracleResult{false, std::nullopt, OracleMethod::Backtracking},
                                0};
    }
    Backtracker bt(d, node_budget);
    const bool found = bt.search(0);
    if (bt.out_of_budget) {
        return BacktrackOutcome{std::nullopt, bt.nodes};
    }
    if (found) {
        return BacktrackOutcome{
            OracleResult{true, bt.path, OracleMethod::Backtracking}, bt.nodes};
    }
    return BacktrackOutcome{OracleResult{false, std::nullopt, OracleMethod::Backtracking},
                            bt.nodes};
}

Digraph undirected_to_digraph(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    std::unordered_set<long long> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(Errc::VertexOutOfRange,
                        "edge " + std::to_string(i) + " endpoint out of range");
        }
        if (u == v) throw Error(Errc::SelfLoop, "edge " + std::to_string(i) + " is a loop");
        const long long a = std::min(u, v);
        const long long b = std::max(u, v);
        if (!seen.insert(a * n + b).second) {
            throw Error(Errc::DuplicateEdge, "edge " + std::to_string(i) + " is a duplicate");
        }
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, std::move(arcs));
}

ArcSet witness_arcs(const Digraph& d, const std::vector<int>& cycle) {
    std::vector<int> members;
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % n];
        bool found = false;
        for (int j : d.out_arcs(u)) {
            if (d.head(j) == v) {
                members.push_back(j);
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error(Errc::VertexOutOfRange,
                        "witness step (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") is not an arc");
        }
    }
    return make_arcset(d, std::move(members));
}

}  // namespace hcaudit
