#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths on purpose.

#include <algorithm>
#include <functional>
#include <vector>

#include "hcaudit/digraph.hpp"
#include "hcaudit/matching.hpp"
#include "hcaudit/rng.hpp"

namespace testsupport {

/// Fraction-free (Bareiss) Gaussian elimination rank over the integers.
/// Divisions are exact by Sylvester's identity; __int128 intermediates
/// give ample headroom for the small matrices used in tests.
inline int exact_rank(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                const __int128 num =
                    static_cast<__int128>(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] -
                    static_cast<__int128>(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) *
                        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long long>(num / prev);
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

/// Dense incidence submatrix of d restricted to the columns in s.
inline std::vector<std::vector<long long>> incidence_submatrix(const hcaudit::Digraph& d,
                                                               const hcaudit::ArcSet& s) {
    std::vector<std::vector<long long>> m(
        static_cast<std::size_t>(d.vertex_count()),
        std::vector<long long>(s.members.size(), 0));
    for (std::size_t col = 0; col < s.members.size(); ++col) {
        const int j = s.members[col];
        m[static_cast<std::size_t>(d.tail(j))][col] = 1;
        m[static_cast<std::size_t>(d.head(j))][col] = -1;
    }
    return m;
}

/// Exhaustive maximum-matching size: every X vertex tries every free
/// neighbor or stays unmatched.
inline int brute_max_matching(const hcaudit::BipartiteGraph& g) {
    std::vector<char> used_y(static_cast<std::size_t>(g.y_size()), 0);
    std::function<int(int)> go = [&](int x) -> int {
        if (x == g.x_size()) return 0;
        int best = go(x + 1);
        for (int e : g.x_edges(x)) {
            const int y = g.edge(e).second;
            if (used_y[static_cast<std::size_t>(y)]) continue;
            used_y[static_cast<std::size_t>(y)] = 1;
            best = std::max(best, 1 + go(x + 1));
            used_y[static_cast<std::size_t>(y)] = 0;
        }
        return best;
    };
    return go(0);
}

/// Direct Hamiltonian-cycle search on an undirected edge list.
inline bool undirected_hamiltonian(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 3) {
        // An undirected cycle needs at least 3 distinct vertices.
        return false;
    }
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    std::function<bool(int, int)> go = [&](int v, int depth) -> bool {
        if (depth == n) return adj[static_cast<std::size_t>(v)][0];
        for (int w = 0; w < n; ++w) {
            if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            if (go(w, depth + 1)) return true;
            visited[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return go(0, 1);
}

inline hcaudit::Digraph random_digraph(hcaudit::Rng& rng, int n, double p) {
    std::vector<hcaudit::Arc> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && rng.chance(p)) arcs.emplace_back(u, v);
        }
    }
    return hcaudit::Digraph(n, std::move(arcs));
}

inline hcaudit::BipartiteGraph random_bipartite(hcaudit::Rng& rng, int x, int y, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < x; ++a) {
        for (int b = 0; b < y; ++b) {
            if (rng.chance(p)) edges.emplace_back(a, b);
        }
    }
    return hcaudit::BipartiteGraph(x, y, std::move(edges));
}

/// Fixed-point-free permutation by shuffle and rejection.
inline std::vector<int> random_derangement(hcaudit::Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (;;) {
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        rng.shuffle(perm);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            if (perm[static_cast<std::size_t>(i)] == i) {
                ok = false;
                break;
            }
        }
        if (ok) return perm;
    }
}

}  // namespace testsupport
