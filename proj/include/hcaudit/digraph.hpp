#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hcaudit {

using Arc = std::pair<int, int>;  // (tail, head)

/// Simple digraph: no self-loops, no duplicate arcs. Arc j is identified
/// by its position in the construction list and never changes identity.
/// Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    /// Validates simplicity and index ranges; throws Error with code
    /// SelfLoop / DuplicateArc / VertexOutOfRange.
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const noexcept { return n_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    Arc arc(int j) const { return arcs_[static_cast<std::size_t>(j)]; }
    int tail(int j) const { return arc(j).first; }
    int head(int j) const { return arc(j).second; }

    bool has_arc(int u, int v) const;

    /// Arc indices leaving / entering a vertex, ascending.
    const std::vector<int>& out_arcs(int u) const { return out_[static_cast<std::size_t>(u)]; }
    const std::vector<int>& in_arcs(int v) const { return in_[static_cast<std::size_t>(v)]; }

    int out_degree(int u) const { return static_cast<int>(out_arcs(u).size()); }
    int in_degree(int v) const { return static_cast<int>(in_arcs(v).size()); }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Subset of a digraph's arcs, stored as sorted unique arc indices.
struct ArcSet {
    std::vector<int> members;

    bool operator==(const ArcSet&) const = default;
};

/// Validates members against d; throws Error(VertexOutOfRange-style) on
/// stray indices. Sorted/deduplicated copy.
ArcSet make_arcset(const Digraph& d, std::vector<int> members);

ArcSet full_arcset(const Digraph& d);

/// Forward relation on arcs: returns head(a_i) when head(a_i) = tail(a_j),
/// empty otherwise; bowtie(i, i) is always empty.
std::optional<int> bowtie(const Digraph& d, int i, int j);

enum class CycleClass { NotCycle, Cycle, SimpleCycle, HamiltonianCycle };

/// SimpleCycle: one directed cycle (in = out = 1 within s on every touched
/// vertex, single weak component). Cycle: disjoint union of two or more
/// directed cycles. HamiltonianCycle: SimpleCycle with |s| = n >= 2.
CycleClass classify_arcset(const Digraph& d, const ArcSet& s);

const char* cycle_class_name(CycleClass c);

}  // namespace hcaudit
