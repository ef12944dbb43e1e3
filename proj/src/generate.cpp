#include "hcaudit/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hcaudit/arclist.hpp"
#include "hcaudit/errors.hpp"
#include "hcaudit/rng.hpp"

namespace hcaudit {

const char* family_name(Family f) {
    switch (f) {
        case Family::Gnp: return "gnp";
        case Family::DegreeBoundTwo: return "degree-bound-two";
        case Family::SingleCycle: return "single-cycle";
        case Family::DisjointCycles: return "disjoint-cycles";
        case Family::Prism: return "prism";
        case Family::FromFile: return "from-file";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "gnp") return Family::Gnp;
    if (name == "degree-bound-two" || name == "degree2") return Family::DegreeBoundTwo;
    if (name == "single-cycle" || name == "cycle") return Family::SingleCycle;
    if (name == "disjoint-cycles") return Family::DisjointCycles;
    if (name == "prism") return Family::Prism;
    if (name == "from-file") return Family::FromFile;
    throw Error(Errc::InfeasibleSpec, "unknown family '" + name + "'");
}

namespace {

Digraph gen_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(Errc::InvalidProbability, "p must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.chance(p)) arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph gen_degree_bound_two(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Arc> arcs;
    std::vector<int> in_deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    if (n >= 2) {
        for (int u = 0; u < n; ++u) {
            // Up to two out-neighbors; a bounded number of rejection draws
            // keeps the generator total on crowded instances.
            for (int k = 0; k < 2; ++k) {
                for (int attempt = 0; attempt < 32; ++attempt) {
                    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                    if (v == u) continue;
                    if (in_deg[static_cast<std::size_t>(v)] >= 2) continue;
                    auto& row = out[static_cast<std::size_t>(u)];
                    if (std::find(row.begin(), row.end(), v) != row.end()) continue;
                    row.push_back(v);
                    in_deg[static_cast<std::size_t>(v)]++;
                    arcs.emplace_back(u, v);
                    break;
                }
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph gen_single_cycle(int n, std::uint64_t seed) {
    if (n < 2) throw Error(Errc::InfeasibleSpec, "a directed cycle needs n >= 2");
    Rng rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(order[static_cast<std::size_t>(i)],
                          order[static_cast<std::size_t>((i + 1) % n)]);
    }
    return Digraph(n, std::move(arcs));
}

Digraph gen_disjoint_cycles(int n, const std::vector<int>& lengths, std::uint64_t seed) {
    long long total = 0;
    for (int len : lengths) {
        if (len < 2) throw Error(Errc::InfeasibleSpec, "cycle lengths must be >= 2");
        total += len;
    }
    if (lengths.empty() || total != n) {
        throw Error(Errc::InfeasibleSpec, "cycle lengths must sum to n");
    }
    Rng rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    std::size_t base = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i) {
            arcs.emplace_back(order[base + static_cast<std::size_t>(i)],
                              order[base + static_cast<std::size_t>((i + 1) % len)]);
        }
        base += static_cast<std::size_t>(len);
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace

Digraph prism() {
    return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                       {0, 3}, {3, 0}, {1, 4}, {4, 1}, {2, 5}, {5, 2}});
}

Digraph generate(const GenSpec& spec) {
    if (spec.n < 0) throw Error(Errc::InfeasibleSpec, "n must be nonnegative");
    switch (spec.family) {
        case Family::Gnp:
            return gen_gnp(spec.n, spec.p, spec.seed);
        case Family::DegreeBoundTwo:
            return gen_degree_bound_two(spec.n, spec.seed);
        case Family::SingleCycle:
            return gen_single_cycle(spec.n, spec.seed);
        case Family::DisjointCycles:
            return gen_disjoint_cycles(spec.n, spec.cycle_lengths, spec.seed);
        case Family::Prism:
            if (spec.n != 0 && spec.n != 6) {
                throw Error(Errc::InfeasibleSpec, "the prism instance has n = 6");
            }
            return prism();
        case Family::FromFile:
            return read_arclist_file(spec.path);
    }
    throw Error(Errc::InfeasibleSpec, "unhandled family");
}

}  // namespace hcaudit
