#include "hcaudit/scc.hpp"

#include <algorithm>

namespace hcaudit {

SccResult tarjan_scc(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    constexpr int kUnvisited = -1;

    std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<int> component(static_cast<std::size_t>(n), kUnvisited);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;

    struct Frame {
        int v;
        std::size_t next_child;
    };
    std::vector<Frame> call_stack;

    for (int start = 0; start < n; ++start) {
        if (index[static_cast<std::size_t>(start)] != kUnvisited) continue;
        call_stack.push_back({start, 0});
        while (!call_stack.empty()) {
            Frame& f = call_stack.back();
            const std::size_t v = static_cast<std::size_t>(f.v);
            if (f.next_child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(f.v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (f.next_child < adj[v].size()) {
                const int w = adj[v][f.next_child++];
                const std::size_t wz = static_cast<std::size_t>(w);
                if (index[wz] == kUnvisited) {
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[wz]) {
                    lowlink[v] = std::min(lowlink[v], index[wz]);
                }
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    component[static_cast<std::size_t>(w)] = comp_count;
                } while (w != f.v);
                ++comp_count;
            }
            const int finished = f.v;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                Frame& parent = call_stack.back();
                const std::size_t p = static_cast<std::size_t>(parent.v);
                lowlink[p] = std::min(lowlink[p], lowlink[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return SccResult{std::move(component), comp_count};
}

SccResult tarjan_scc(const Digraph& d) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d.vertex_count()));
    for (const auto& [u, v] : d.arcs()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
    }
    return tarjan_scc(adj);
}

bool strongly_connected(const Digraph& d) {
    if (d.vertex_count() <= 1) return true;
    return tarjan_scc(d).count == 1;
}

}  // namespace hcaudit
