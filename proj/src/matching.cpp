#include "hcaudit/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "hcaudit/errors.hpp"
#include "hcaudit/scc.hpp"

namespace hcaudit {

BipartiteGraph::BipartiteGraph(int x_size, int y_size, std::vector<std::pair<int, int>> edges)
    : x_size_(x_size), y_size_(y_size), edges_(std::move(edges)) {
    if (x_size_ < 0 || y_size_ < 0) {
        throw Error(Errc::VertexOutOfRange, "side sizes must be nonnegative");
    }
    x_adj_.resize(static_cast<std::size_t>(x_size_));
    std::unordered_set<long long> seen;
    seen.reserve(edges_.size() * 2);
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const auto [x, y] = edges_[j];
        if (x < 0 || x >= x_size_ || y < 0 || y >= y_size_) {
            throw Error(Errc::VertexOutOfRange,
                        "edge " + std::to_string(j) + " endpoint out of range");
        }
        if (!seen.insert(static_cast<long long>(x) * y_size_ + y).second) {
            throw Error(Errc::DuplicateEdge, "edge " + std::to_string(j) + " is a duplicate");
        }
        x_adj_[static_cast<std::size_t>(x)].push_back(static_cast<int>(j));
    }
}

BipartiteGraph to_bipartite(const BipartiteZMap& z) {
    return BipartiteGraph(z.x_size(), z.y_size(), z.source().arcs());
}

namespace {

constexpr int kFree = -1;
constexpr int kInf = std::numeric_limits<int>::max();

/// Hopcroft-Karp state. match_x[x] / match_y[y] hold the matched edge
/// index, or kFree.
struct HopcroftKarp {
    const BipartiteGraph& g;
    std::vector<int> match_x, match_y;
    std::vector<int> dist;
    std::vector<int> queue;

    explicit HopcroftKarp(const BipartiteGraph& graph)
        : g(graph),
          match_x(static_cast<std::size_t>(graph.x_size()), kFree),
          match_y(static_cast<std::size_t>(graph.y_size()), kFree),
          dist(static_cast<std::size_t>(graph.x_size()), kInf) {
        queue.reserve(static_cast<std::size_t>(graph.x_size()));
    }

    int other_x(int edge) const { return g.edge(edge).first; }
    int other_y(int edge) const { return g.edge(edge).second; }

    bool bfs() {
        queue.clear();
        for (int x = 0; x < g.x_size(); ++x) {
            if (match_x[static_cast<std::size_t>(x)] == kFree) {
                dist[static_cast<std::size_t>(x)] = 0;
                queue.push_back(x);
            } else {
                dist[static_cast<std::size_t>(x)] = kInf;
            }
        }
        bool reachable_free_y = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            for (int e : g.x_edges(x)) {
                const int y = other_y(e);
                const int back = match_y[static_cast<std::size_t>(y)];
                if (back == kFree) {
                    reachable_free_y = true;
                } else {
                    const int x2 = other_x(back);
                    if (dist[static_cast<std::size_t>(x2)] == kInf) {
                        dist[static_cast<std::size_t>(x2)] =
                            dist[static_cast<std::size_t>(x)] + 1;
                        queue.push_back(x2);
                    }
                }
            }
        }
        return reachable_free_y;
    }

    bool dfs(int x) {
        for (int e : g.x_edges(x)) {
            const int y = other_y(e);
            const int back = match_y[static_cast<std::size_t>(y)];
            if (back == kFree) {
                match_x[static_cast<std::size_t>(x)] = e;
                match_y[static_cast<std::size_t>(y)] = e;
                return true;
            }
            const int x2 = other_x(back);
            if (dist[static_cast<std::size_t>(x2)] == dist[static_cast<std::size_t>(x)] + 1 &&
                dfs(x2)) {
                match_x[static_cast<std::size_t>(x)] = e;
                match_y[static_cast<std::size_t>(y)] = e;
                return true;
            }
        }
        dist[static_cast<std::size_t>(x)] = kInf;
        return false;
    }

    void run() {
        while (bfs()) {
            for (int x = 0; x < g.x_size(); ++x) {
                if (match_x[static_cast<std::size_t>(x)] == kFree) dfs(x);
            }
        }
    }
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
    HopcroftKarp hk(g);
    hk.run();
    std::vector<int> edges;
    for (int x = 0; x < g.x_size(); ++x) {
        if (hk.match_x[static_cast<std::size_t>(x)] != kFree) {
            edges.push_back(hk.match_x[static_cast<std::size_t>(x)]);
        }
    }
    std::sort(edges.begin(), edges.end());
    return Matching{std::move(edges)};
}

std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g) {
    HopcroftKarp hk(g);
    hk.run();
    int matched = 0;
    for (int x = 0; x < g.x_size(); ++x) {
        if (hk.match_x[static_cast<std::size_t>(x)] != kFree) ++matched;
    }
    if (matched == g.x_size()) return std::nullopt;

    // Alternating reachability from free X vertices: non-matching edge to
    // Y, matching edge back to X. The reached X set violates Hall.
    std::vector<char> x_seen(static_cast<std::size_t>(g.x_size()), 0);
    std::vector<char> y_seen(static_cast<std::size_t>(g.y_size()), 0);
    std::vector<int> stack;
    for (int x = 0; x < g.x_size(); ++x) {
        if (hk.match_x[static_cast<std::size_t>(x)] == kFree) {
            x_seen[static_cast<std::size_t>(x)] = 1;
            stack.push_back(x);
        }
    }
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int e : g.x_edges(x)) {
            const int y = g.edge(e).second;
            if (y_seen[static_cast<std::size_t>(y)]) continue;
            y_seen[static_cast<std::size_t>(y)] = 1;
            const int back = hk.match_y[static_cast<std::size_t>(y)];
            if (back != kFree) {
                const int x2 = g.edge(back).first;
                if (!x_seen[static_cast<std::size_t>(x2)]) {
                    x_seen[static_cast<std::size_t>(x2)] = 1;
                    stack.push_back(x2);
                }
            }
        }
    }
    std::vector<int> violator;
    for (int x = 0; x < g.x_size(); ++x) {
        if (x_seen[static_cast<std::size_t>(x)]) violator.push_back(x);
    }
    return violator;
}

AllowedEdgeSet allowed_edges(const BipartiteGraph& g) {
    if (g.x_size() != g.y_size()) {
        throw Error(Errc::NotBalanced, "allowed_edges requires |X| = |Y|");
    }
    return allowed_edges_with_matching(g, max_matching(g));
}

AllowedEdgeSet allowed_edges_with_matching(const BipartiteGraph& g, const Matching& m) {
    if (g.x_size() != g.y_size()) {
        throw Error(Errc::NotBalanced, "allowed_edges requires |X| = |Y|");
    }
    const int n = g.x_size();
    if (m.size() < n) {
        return AllowedEdgeSet{{}, /*no_perfect_matching=*/n > 0};
    }

    // Orient matched edges x -> y and the rest y -> x; an unmatched edge
    // lies in some perfect matching iff its endpoints share an SCC (it
    // then sits on an alternating cycle). Matched edges always qualify.
    std::vector<char> in_matching(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : m.edges) in_matching[static_cast<std::size_t>(e)] = 1;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [x, y] = g.edge(e);
        if (in_matching[static_cast<std::size_t>(e)]) {
            adj[static_cast<std::size_t>(x)].push_back(n + y);
        } else {
            adj[static_cast<std::size_t>(n + y)].push_back(x);
        }
    }
    const SccResult scc = tarjan_scc(adj);

    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [x, y] = g.edge(e);
        if (in_matching[static_cast<std::size_t>(e)] ||
            scc.component[static_cast<std::size_t>(x)] ==
                scc.component[static_cast<std::size_t>(n + y)]) {
            members.push_back(e);
        }
    }
    return AllowedEdgeSet{std::move(members), false};
}

namespace {

struct Enumerator {
    const BipartiteGraph& g;
    const std::function<bool(const Matching&)>& fn;
    std::vector<char> y_used;
    std::vector<int> chosen;  // edge per matched X vertex, in X order

    bool emit() {
        std::vector<int> edges = chosen;
        std::sort(edges.begin(), edges.end());
        return fn(Matching{std::move(edges)});
    }

    // Returns false to abort the whole search (fn asked to stop).
    bool extend(int x) {
        if (x == g.x_size()) return emit();
        for (int e : g.x_edges(x)) {
            const int y = g.edge(e).second;
            if (y_used[static_cast<std::size_t>(y)]) continue;
            y_used[static_cast<std::size_t>(y)] = 1;
            chosen.push_back(e);
            const bool keep_going = extend(x + 1);
            chosen.pop_back();
            y_used[static_cast<std::size_t>(y)] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

bool for_each_perfect_matching(const BipartiteGraph& g,
                               const std::function<bool(const Matching&)>& fn) {
    if (g.x_size() != g.y_size()) return true;  // no perfect matching possible
    if (g.x_size() == 0) {
        return fn(Matching{});  // the empty matching is perfect
    }
    for (int x = 0; x < g.x_size(); ++x) {
        if (g.x_edges(x).empty()) return true;
    }
    Enumerator en{g, fn, std::vector<char>(static_cast<std::size_t>(g.y_size()), 0), {}};
    en.chosen.reserve(static_cast<std::size_t>(g.x_size()));
    return en.extend(0);
}

EnumerationResult enumerate_perfect_matchings(const BipartiteGraph& g, std::uint64_t limit) {
    if (limit < 1) throw Error(Errc::InfeasibleSpec, "enumeration limit must be >= 1");
    EnumerationResult result;
    for_each_perfect_matching(g, [&](const Matching& m) {
        if (static_cast<std::uint64_t>(result.matchings.size()) == limit) {
            result.truncated = true;  // a (limit+1)-th matching exists
            return false;
        }
        result.matchings.push_back(m);
        return true;
    });
    return result;
}

}  // namespace hcaudit
